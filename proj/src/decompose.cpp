#include <algorithm>
#include <set>
#include <unordered_set>

#include "platlab/freegroup.hpp"

namespace platlab {

namespace {

using Letters = std::vector<Letter>;

std::vector<Letter> reduced_letters(const CommutatorTree& t, int rank) {
  auto w = flatten(t, rank);
  return Letters(w.letters().begin(), w.letters().end());
}

struct Candidate {
  Letters flat;  // reduced flattened word (reversed in the right-hand table)
  CommutatorTree tree;
};

// Simple trees of length lo..hi over the given signed leaves, at most `limit`
// in total. Lengths are added whole: a length is dropped if it would overflow.
std::vector<CommutatorTree> simple_trees(const std::vector<CommutatorTree>& leaves, int lo, int hi,
                                         std::size_t limit) {
  std::vector<CommutatorTree> out;
  std::vector<CommutatorTree> level = leaves;
  for (int len = 2; len <= hi; ++len) {
    std::vector<CommutatorTree> next;
    std::size_t projected = level.size() * leaves.size() * (len == 2 ? 1 : 2);
    if (out.size() + projected > limit) break;
    for (const auto& t : level) {
      for (const auto& l : leaves) {
        if (len == 2) {
          if (l.generator() != t.generator()) next.push_back(CommutatorTree::bracket(t, l));
        } else {
          next.push_back(CommutatorTree::bracket(t, l));
          next.push_back(CommutatorTree::bracket(l, t));
        }
      }
    }
    level = std::move(next);
    if (len >= lo) out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

class Table {
 public:
  Table(std::vector<Candidate> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Candidate& a, const Candidate& b) { return a.flat < b.flat; });
    entries_.erase(std::unique(entries_.begin(), entries_.end(),
                               [](const Candidate& a, const Candidate& b) { return a.flat == b.flat; }),
                   entries_.end());
    for (const auto& e : entries_) {
      min_len_ = std::min(min_len_, e.flat.size());
      max_len_ = std::max(max_len_, e.flat.size());
    }
  }

  // Calls f(candidate, p) for every entry whose longest common prefix with r
  // is p and whose length is at most 2p (so peeling it does not lengthen r).
  template <class F>
  void for_each_shortening(const Letters& r, F&& f) const {
    if (entries_.empty()) return;
    std::size_t p_lo = (min_len_ + 1) / 2;
    std::size_t p_hi = std::min(r.size(), max_len_);
    for (std::size_t p = std::max<std::size_t>(p_lo, 1); p <= p_hi; ++p) {
      auto [first, last] = prefix_range(r, p);
      if (first == last) break;
      for (auto it = first; it != last; ++it) {
        const auto& flat = it->flat;
        if (flat.size() > 2 * p) continue;
        if (flat.size() > p && p < r.size() && flat[p] == r[p]) continue;  // longer lcp
        f(*it, p);
      }
    }
  }

  bool empty() const { return entries_.empty(); }

 private:
  using Iter = std::vector<Candidate>::const_iterator;

  std::pair<Iter, Iter> prefix_range(const Letters& r, std::size_t p) const {
    auto less_entry = [p](const Candidate& c, const Letters& key) {
      return std::lexicographical_compare(c.flat.begin(), c.flat.begin() + std::min(p, c.flat.size()),
                                          key.begin(), key.begin() + p);
    };
    auto less_key = [p](const Letters& key, const Candidate& c) {
      return std::lexicographical_compare(key.begin(), key.begin() + p, c.flat.begin(),
                                          c.flat.begin() + std::min(p, c.flat.size()));
    };
    auto first = std::lower_bound(entries_.begin(), entries_.end(), r, less_entry);
    auto last = std::upper_bound(first, entries_.end(), r, less_key);
    return {first, last};
  }

  std::vector<Candidate> entries_;
  std::size_t min_len_ = static_cast<std::size_t>(-1);
  std::size_t max_len_ = 0;
};

struct Move {
  bool right;
  std::size_t new_length;
  const Candidate* candidate;
  std::size_t overlap;
};

class Search {
 public:
  Search(int rank, const Table& left, const Table& right, std::size_t budget)
      : rank_(rank), left_(left), right_(right), budget_(budget) {}

  bool run(const Letters& r) {
    if (r.empty()) return true;
    if (nodes_++ >= budget_) return false;
    if (!visited_.insert(r).second) return false;

    std::vector<Move> moves;
    left_.for_each_shortening(r, [&](const Candidate& c, std::size_t p) {
      moves.push_back({false, r.size() + c.flat.size() - 2 * p, &c, p});
    });
    Letters rev(r.rbegin(), r.rend());
    right_.for_each_shortening(rev, [&](const Candidate& c, std::size_t p) {
      moves.push_back({true, r.size() + c.flat.size() - 2 * p, &c, p});
    });
    std::stable_sort(moves.begin(), moves.end(),
                     [](const Move& a, const Move& b) { return a.new_length < b.new_length; });

    for (const auto& mv : moves) {
      Letters next;
      if (!mv.right) {
        // flat^-1 * r: drop the common prefix, prepend the inverse of the rest of flat.
        const auto& f = mv.candidate->flat;
        for (std::size_t i = f.size(); i > mv.overlap; --i) next.push_back(-f[i - 1]);
        next.insert(next.end(), r.begin() + mv.overlap, r.end());
        left_trees_.push_back(mv.candidate->tree);
      } else {
        // r * flat^-1, with flat stored reversed.
        const auto& frev = mv.candidate->flat;
        next.assign(r.begin(), r.end() - mv.overlap);
        for (std::size_t i = mv.overlap; i < frev.size(); ++i) next.push_back(-frev[i]);
        right_trees_.push_back(mv.candidate->tree);
      }
      FreeWord reduced = reduce(FreeWord(rank_, std::move(next)));
      next.assign(reduced.letters().begin(), reduced.letters().end());
      if (run(next)) return true;
      if (mv.right) {
        right_trees_.pop_back();
      } else {
        left_trees_.pop_back();
      }
      if (nodes_ >= budget_) return false;
    }
    return false;
  }

  std::vector<CommutatorTree> result() const {
    std::vector<CommutatorTree> out = left_trees_;
    out.insert(out.end(), right_trees_.rbegin(), right_trees_.rend());
    return out;
  }

 private:
  int rank_;
  const Table& left_;
  const Table& right_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::set<Letters> visited_;
  std::vector<CommutatorTree> left_trees_;
  std::vector<CommutatorTree> right_trees_;
};

// For w in F^(2): move leaves leftwards through the product, rewriting
// X l = l X [X^-1, l^-1], until all leaves sit in front in generator order
// and cancel. Every bracket produced is simple because one side is a leaf.
// The number of brackets can grow exponentially, so give up past `limit` items.
std::vector<CommutatorTree> collect_leaves(const FreeWord& w, std::size_t limit) {
  std::vector<CommutatorTree> items;
  auto key = [](const CommutatorTree& t) { return t.is_leaf() ? t.generator() : 1 << 30; };
  for (Letter l : w.letters()) {
    CommutatorTree leaf = CommutatorTree::leaf(generator_of(l), exponent_of(l));
    std::size_t pos = items.size();
    items.push_back(leaf);
    while (pos > 0) {
      const CommutatorTree& left = items[pos - 1];
      if (left.is_leaf() && left.generator() == leaf.generator()) {
        if (left.exponent() == -leaf.exponent()) {
          items.erase(items.begin() + (pos - 1), items.begin() + pos + 1);
        }
        break;
      }
      if (key(left) < key(leaf)) break;
      CommutatorTree x = left;
      CommutatorTree extra = CommutatorTree::bracket(x.inverse(), leaf.inverse());
      items[pos - 1] = leaf;
      items[pos] = x;
      items.insert(items.begin() + pos + 1, extra);
      if (items.size() > limit) return {};
      --pos;
    }
  }
  // Drop adjacent T T^-1 pairs.
  std::vector<CommutatorTree> out;
  for (auto& t : items) {
    if (!out.empty() && out.back() == t.inverse()) {
      out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool valid_result(const std::vector<CommutatorTree>& trees, const FreeWord& target, int m) {
  for (const auto& t : trees) {
    if (!t.is_simple() || t.length() < m) return false;
  }
  return flatten(trees, target.rank()) == target;
}

}  // namespace

std::vector<CommutatorTree> decompose_simple_quasi(const FreeWord& w, int m, const DecomposeOptions& options) {
  const FreeWord r = reduce(w);
  if (r.empty()) return {};
  if (m <= 1) {
    std::vector<CommutatorTree> leaves;
    for (Letter l : r.letters()) leaves.push_back(CommutatorTree::leaf(generator_of(l), exponent_of(l)));
    return leaves;
  }
  const int cap = std::max(options.cap, m);
  auto depth = lcs_depth(r, cap);
  if (depth.depth < m) {
    throw DecompositionError("word is not in F^(" + std::to_string(m) + "), its depth is " +
                             std::to_string(depth.depth));
  }

  std::set<int> gens;
  for (Letter l : r.letters()) gens.insert(generator_of(l));
  std::vector<CommutatorTree> leaves;
  for (int g : gens) {
    leaves.push_back(CommutatorTree::leaf(g, 1));
    leaves.push_back(CommutatorTree::leaf(g, -1));
  }

  // Iterative deepening on the longest candidate tree.
  for (int hi = m; hi <= m + 3; ++hi) {
    auto trees = simple_trees(leaves, m, hi, options.table_limit);
    if (trees.empty()) break;
    std::vector<Candidate> fwd, bwd;
    fwd.reserve(trees.size());
    bwd.reserve(trees.size());
    int longest = 0;
    for (const auto& t : trees) {
      Letters flat = reduced_letters(t, r.rank());
      if (flat.empty()) continue;
      longest = std::max(longest, t.length());
      bwd.push_back({Letters(flat.rbegin(), flat.rend()), t});
      fwd.push_back({std::move(flat), t});
    }
    Table left(std::move(fwd)), right(std::move(bwd));
    Search search(r.rank(), left, right, options.node_budget);
    Letters start(r.letters().begin(), r.letters().end());
    if (search.run(start)) {
      auto result = search.result();
      if (valid_result(result, r, m)) return result;
    }
    if (longest < hi) break;  // table limit reached, deeper tables are not built
  }

  if (m == 2) {
    auto result = collect_leaves(r, options.table_limit);
    if (valid_result(result, r, m)) return result;
  }
  throw DecompositionError("search budget exhausted decomposing a word of length " +
                           std::to_string(r.length()));
}

}  // namespace platlab
