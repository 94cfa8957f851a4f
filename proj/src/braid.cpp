#include "platlab/braid.hpp"

#include <cctype>
#include <numeric>

namespace platlab {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw BraidError("a braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.generator < 1 || l.generator >= strands_) {
      throw BraidError("generator s" + std::to_string(l.generator) + " out of range for " +
                       std::to_string(strands_) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) throw BraidError("braid letter sign must be +1 or -1");
  }
}

std::vector<int> BraidWord::permutation() const {
  // at[q] = strand currently at position q
  std::vector<int> at(strands_);
  std::iota(at.begin(), at.end(), 0);
  for (const auto& l : letters_) std::swap(at[l.generator - 1], at[l.generator]);
  std::vector<int> perm(strands_);
  for (int q = 0; q < strands_; ++q) perm[at[q]] = q;
  return perm;
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->generator, -it->sign});
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  if (strands_ != other.strands_) throw BraidError("braids on different numbers of strands");
  auto letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(strands_, std::move(letters));
}

BraidWord pure_generator(int strands, int i, int j, int exponent) {
  if (i < 1 || j > strands || i >= j) {
    throw BraidError("A(" + std::to_string(i) + "," + std::to_string(j) + ") out of range for " +
                     std::to_string(strands) + " strands");
  }
  std::vector<BraidLetter> one;
  for (int g = j - 1; g > i; --g) one.push_back({g, 1});
  one.push_back({i, 1});
  one.push_back({i, 1});
  for (int g = i + 1; g <= j - 1; ++g) one.push_back({g, -1});
  BraidWord a(strands, one);
  if (exponent < 0) a = a.inverse();
  BraidWord out(strands);
  for (int k = 0; k < std::abs(exponent); ++k) out = out * a;
  return out;
}

namespace {

class BraidParser {
 public:
  BraidParser(std::string_view text, int strands) : text_(text), strands_(strands) {}

  BraidWord parse() {
    BraidWord out(strands_);
    while (true) {
      skip();
      if (pos_ >= text_.size()) return out;
      char c = text_[pos_];
      if (c == 's' || c == 'S') {
        ++pos_;
        int g = number();
        if (g < 1 || g >= strands_) {
          throw BraidError("generator s" + std::to_string(g) + " out of range for " + std::to_string(strands_) +
                           " strands");
        }
        int e = exponent();
        BraidWord one(strands_, std::vector<BraidLetter>{BraidLetter{g, e < 0 ? -1 : 1}});
        for (int k = 0; k < std::abs(e); ++k) out = out * one;
      } else if (c == 'A' || c == 'a') {
        ++pos_;
        expect('(');
        int i = number();
        expect(',');
        int j = number();
        expect(')');
        out = out * pure_generator(strands_, i, j, exponent());
      } else {
        throw ParseError("unexpected character '" + std::string(1, c) + "' in braid", pos_);
      }
    }
  }

 private:
  void skip() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',' ||
                                   text_[pos_] == '*' || text_[pos_] == '.')) {
      ++pos_;
    }
  }
  void expect(char c) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  int number() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 100000) throw ParseError("number too large", start);
    }
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return static_cast<int>(neg ? -v : v);
  }
  int exponent() {
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return number();
    }
    return 1;
  }

  std::string_view text_;
  int strands_;
  std::size_t pos_ = 0;
};

struct StrandVisits {
  std::vector<std::vector<Visit>> visits;  // per strand, top to bottom
  std::vector<int> signs;
};

// Crossings of the braid drawn top to bottom; down[s] says whether strand s
// is oriented downwards, which fixes the crossing signs.
StrandVisits strand_visits(const BraidWord& b, const std::vector<bool>& down) {
  StrandVisits out;
  out.visits.resize(b.strands());
  std::vector<int> at(b.strands());
  std::iota(at.begin(), at.end(), 0);
  for (const auto& l : b.letters()) {
    int left = at[l.generator - 1];
    int right = at[l.generator];
    int over = l.sign > 0 ? right : left;
    int under = l.sign > 0 ? left : right;
    int x = static_cast<int>(out.signs.size());
    int eps = (down[over] ? 1 : -1) * (down[under] ? 1 : -1);
    out.signs.push_back(l.sign * eps);
    out.visits[over].push_back({x, true});
    out.visits[under].push_back({x, false});
    std::swap(at[l.generator - 1], at[l.generator]);
  }
  return out;
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) { return BraidParser(text, strands).parse(); }

std::string to_string(const BraidWord& b) {
  std::string out;
  for (const auto& l : b.letters()) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l.generator);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

bool is_pure(const BraidWord& b) {
  auto perm = b.permutation();
  for (int p = 0; p < b.strands(); ++p) {
    if (perm[p] != p) return false;
  }
  return true;
}

FreeWord artin_action(const BraidWord& b, const FreeWord& w) {
  if (w.rank() != b.strands()) {
    throw RankMismatch("braid on " + std::to_string(b.strands()) + " strands acting on a rank " +
                       std::to_string(w.rank()) + " word");
  }
  const int n = b.strands();
  FreeWord cur = reduce(w);
  for (const auto& l : b.letters()) {
    const int i = l.generator, j = l.generator + 1;
    FreeWord xi = FreeWord::generator(n, i), xj = FreeWord::generator(n, j);
    FreeWord img_i, img_j;
    if (l.sign > 0) {
      img_i = multiply(multiply(xi, xj), invert(xi));
      img_j = xi;
    } else {
      img_i = xj;
      img_j = multiply(multiply(invert(xj), xi), xj);
    }
    std::vector<Letter> next;
    for (Letter a : cur.letters()) {
      int g = generator_of(a);
      const FreeWord* img = g == i ? &img_i : g == j ? &img_j : nullptr;
      if (!img) {
        next.push_back(a);
        continue;
      }
      if (a > 0) {
        next.insert(next.end(), img->letters().begin(), img->letters().end());
      } else {
        for (auto it = img->letters().rbegin(); it != img->letters().rend(); ++it) next.push_back(-*it);
      }
    }
    cur = reduce(FreeWord(n, std::move(next)));
  }
  return cur;
}

bool artin_rep_trivial(const BraidWord& b, int m) {
  if (!is_pure(b)) throw BraidError("the Artin representation test needs a pure braid");
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  if (m == 0) return true;
  for (int i = 1; i <= b.strands(); ++i) {
    FreeWord x = FreeWord::generator(b.strands(), i);
    FreeWord quotient = multiply(artin_action(b, x), invert(x));
    if (magnus(quotient, m + 1).min_positive_degree() < m + 1) return false;
  }
  return true;
}

LinkDiagram plat_closure(const BraidWord& b) {
  if (b.strands() % 2 != 0) throw BraidError("plat closure needs an even number of strands");
  if (!is_pure(b)) throw BraidError("braid is not pure");
  std::vector<bool> down(b.strands());
  for (int s = 0; s < b.strands(); ++s) down[s] = s % 2 == 0;
  auto sv = strand_visits(b, down);
  std::vector<std::vector<Visit>> comps;
  for (int c = 0; c < b.strands() / 2; ++c) {
    std::vector<Visit> v = sv.visits[2 * c];
    v.insert(v.end(), sv.visits[2 * c + 1].rbegin(), sv.visits[2 * c + 1].rend());
    comps.push_back(std::move(v));
  }
  return LinkDiagram(std::move(comps), std::move(sv.signs));
}

LinkDiagram ordinary_closure(const BraidWord& b) {
  if (!is_pure(b)) throw BraidError("braid is not pure");
  return trace_closure(b);
}

LinkDiagram trace_closure(const BraidWord& b) {
  auto sv = strand_visits(b, std::vector<bool>(b.strands(), true));
  auto perm = b.permutation();
  std::vector<bool> used(b.strands(), false);
  std::vector<std::vector<Visit>> comps;
  for (int s = 0; s < b.strands(); ++s) {
    if (used[s]) continue;
    std::vector<Visit> v;
    for (int t = s; !used[t]; t = perm[t]) {
      used[t] = true;
      v.insert(v.end(), sv.visits[t].begin(), sv.visits[t].end());
    }
    comps.push_back(std::move(v));
  }
  return LinkDiagram(std::move(comps), std::move(sv.signs));
}

}  // namespace platlab
