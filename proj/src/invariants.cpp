#include "platlab/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/integer/common_factor_rt.hpp>

#include "platlab/linkgroup.hpp"

namespace platlab {

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  const int n = d.num_components();
  LinkingMatrix twice(n, std::vector<long>(n, 0));
  for (int x = 0; x < d.num_crossings(); ++x) {
    int a = d.over_component(x), b = d.under_component(x);
    if (a == b) continue;
    twice[a][b] += d.sign(x);
    twice[b][a] += d.sign(x);
  }
  for (auto& row : twice) {
    for (auto& v : row) v /= 2;
  }
  return twice;
}

// ---------------------------------------------------------------------------
// mu-bar

MilnorInvariants::MilnorInvariants(const LinkDiagram& d, int cap)
    : cap_(cap), series_(longitude_series(d, cap)) {}

void MilnorInvariants::check(const std::vector<int>& sequence) const {
  if (sequence.empty()) throw std::invalid_argument("empty mu-bar sequence");
  if (static_cast<int>(sequence.size()) > cap_ + 1) {
    throw std::invalid_argument("mu-bar sequence of length " + std::to_string(sequence.size()) +
                                " exceeds the cap");
  }
  for (int i : sequence) {
    if (i < 1 || i > components()) throw std::invalid_argument("mu-bar index " + std::to_string(i) + " out of range");
  }
}

Integer MilnorInvariants::raw(const std::vector<int>& sequence) const {
  check(sequence);
  if (sequence.size() < 2) return 0;
  std::vector<int> mono(sequence.begin(), sequence.end() - 1);
  return series_[sequence.back() - 1].coefficient(mono);
}

Integer MilnorInvariants::delta(const std::vector<int>& sequence) const {
  check(sequence);
  const std::size_t k = sequence.size();
  std::set<std::vector<int>> seen;
  Integer g = 0;
  // every proper subsequence, then every cyclic rotation of it
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << k); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(sequence[i]);
    }
    if (sub.size() < 2) continue;
    for (std::size_t r = 0; r < sub.size(); ++r) {
      std::vector<int> rot(sub.begin() + r, sub.end());
      rot.insert(rot.end(), sub.begin(), sub.begin() + r);
      if (!seen.insert(rot).second) continue;
      Integer v = raw(rot);
      if (v < 0) v = -v;
      g = boost::integer::gcd(g, v);
    }
  }
  return g;
}

MilnorValue MilnorInvariants::mu_bar(const std::vector<int>& sequence) const {
  MilnorValue out{sequence, raw(sequence), delta(sequence)};
  if (out.delta > 0) {
    out.value %= out.delta;
    if (out.value < 0) out.value += out.delta;
  }
  return out;
}

int MilnorInvariants::vanishing_length() const {
  int d = cap_ + 1;
  for (const auto& s : series_) d = std::min(d, s.min_positive_degree());
  // terms of degree < d vanish, i.e. every mu-bar of length <= d
  return std::min(d, cap_ + 1);
}

std::optional<MilnorValue> MilnorInvariants::first_nonzero() const {
  const int length = vanishing_length() + 1;
  if (length > max_length()) return std::nullopt;
  std::vector<int> seq(length, 1);
  while (true) {
    Integer v = raw(seq);
    if (!v.is_zero()) return MilnorValue{seq, v, Integer(0)};
    int i = length - 1;
    while (i >= 0 && seq[i] == components()) seq[i--] = 1;
    if (i < 0) break;
    ++seq[i];
  }
  return std::nullopt;
}

std::vector<MilnorValue> MilnorInvariants::all_of_length(int length) const {
  std::vector<MilnorValue> out;
  std::vector<int> seq(length, 1);
  while (true) {
    out.push_back(mu_bar(seq));
    int i = length - 1;
    while (i >= 0 && seq[i] == components()) seq[i--] = 1;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

MilnorValue mu_bar(const LinkDiagram& d, const std::vector<int>& sequence) {
  if (sequence.size() < 2) throw std::invalid_argument("mu-bar needs a sequence of length >= 2");
  return MilnorInvariants(d, static_cast<int>(sequence.size())).mu_bar(sequence);
}

// ---------------------------------------------------------------------------
// Conway polynomial

bool ConwayPolynomial::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Integer& c) { return c.is_zero(); });
}

bool operator==(const ConwayPolynomial& a, const ConwayPolynomial& b) {
  std::size_t n = std::max(a.coefficients.size(), b.coefficients.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a.coefficient(static_cast<int>(k)) != b.coefficient(static_cast<int>(k))) return false;
  }
  return true;
}

std::string to_string(const ConwayPolynomial& p) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
    Integer c = p.coefficients[k];
    if (c.is_zero()) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (k == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << "*";
    out << "z";
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

namespace {

void trim(std::vector<Integer>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

class ConwaySolver {
 public:
  explicit ConwaySolver(const ConwayOptions& options) : options_(options) {}

  // Coefficients of z^0..z^degree, or all of them when degree < 0.
  std::vector<Integer> run(const LinkDiagram& input, int degree) {
    LinkDiagram d = input;
    if (d.num_crossings() > 0) {
      LinkDiagram s = simplify(d, options_.simplify_budget);
      // keep the original unless crossings went down, so the recursion measure drops
      if (s.num_crossings() < d.num_crossings()) d = std::move(s);
    }
    std::string key = canonical_key(d) + "#" + std::to_string(degree);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > options_.node_budget) {
      throw ResourceError("Conway polynomial: node budget of " + std::to_string(options_.node_budget) +
                          " exhausted");
    }
    std::vector<Integer> result = solve(d, degree);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::vector<Integer> solve(const LinkDiagram& d, int degree) {
    if (is_split_diagram(d)) return {};
    std::vector<char> seen(d.num_crossings(), 0);
    int bad = -1;
    for (const auto& comp : d.components()) {
      for (const auto& v : comp) {
        if (seen[v.crossing]) continue;
        seen[v.crossing] = 1;
        if (!v.over) {
          bad = v.crossing;
          break;
        }
      }
      if (bad >= 0) break;
    }
    if (bad < 0) {
      if (d.num_components() == 1) return {Integer(1)};
      return {};
    }
    std::vector<int> x{bad};
    std::vector<Integer> result = run(switch_crossings(d, x), degree);
    if (degree != 0) {
      std::vector<Integer> smoothed = run(smooth(d, bad), degree < 0 ? -1 : degree - 1);
      if (result.size() < smoothed.size() + 1) result.resize(smoothed.size() + 1);
      for (std::size_t k = 0; k < smoothed.size(); ++k) result[k + 1] += d.sign(bad) * smoothed[k];
    }
    trim(result);
    return result;
  }

  ConwayOptions options_;
  std::size_t nodes_ = 0;
  std::unordered_map<std::string, std::vector<Integer>> memo_;
};

}  // namespace

ConwayPolynomial conway(const LinkDiagram& d, const ConwayOptions& options) {
  if (d.num_crossings() > options.crossing_bound) {
    throw ResourceError("Conway polynomial: " + std::to_string(d.num_crossings()) +
                        " crossings exceed the bound of " + std::to_string(options.crossing_bound));
  }
  ConwaySolver solver(options);
  return {solver.run(d, -1)};
}

ConwayPolynomial conway_truncated(const LinkDiagram& d, int degree, const ConwayOptions& options) {
  if (degree < 0) throw std::invalid_argument("truncation degree must be non-negative");
  ConwaySolver solver(options);
  return {solver.run(d, degree)};
}

// ---------------------------------------------------------------------------
// Finite type profiles

FiniteTypeProfile unlink_profile(int components, int m) {
  FiniteTypeProfile p;
  p.order = m;
  p.components = components;
  if (m >= 1) p.linking.assign(components, std::vector<long>(components, 0));
  p.conway.assign(m + 1, Integer(0));
  if (components == 1) p.conway[0] = 1;
  p.matches_unlink = true;
  return p;
}

bool same_profile(const FiniteTypeProfile& a, const FiniteTypeProfile& b) {
  return a.order == b.order && a.components == b.components && a.linking == b.linking && a.conway == b.conway;
}

FiniteTypeProfile finite_type_profile(const LinkDiagram& d, int m, const ConwayOptions& options) {
  if (m < 0) throw std::invalid_argument("profile order must be non-negative");
  FiniteTypeProfile p;
  p.order = m;
  p.components = d.num_components();
  if (m >= 1) p.linking = linking_matrix(d);
  p.conway.assign(m + 1, Integer(0));
  ConwayPolynomial c = conway_truncated(d, m, options);
  for (int k = 0; k <= m; ++k) p.conway[k] = c.coefficient(k);
  p.matches_unlink = same_profile(p, unlink_profile(p.components, m));
  return p;
}

Integer evaluate(const InvariantHandle& f, const LinkDiagram& d, const ConwayOptions& options) {
  if (f.kind == InvariantHandle::Kind::Linking) {
    if (f.i < 1 || f.j < 1 || f.i > d.num_components() || f.j > d.num_components()) {
      throw std::invalid_argument("linking number indices out of range");
    }
    return linking_matrix(d)[f.i - 1][f.j - 1];
  }
  if (f.i < 0) throw std::invalid_argument("negative Conway degree");
  return conway_truncated(d, f.i, options).coefficient(f.i);
}

Integer vassiliev_eval(const InvariantHandle& f, const SingularLink& s, const ConwayOptions& options) {
  const std::size_t k = s.double_points.size();
  std::set<int> distinct(s.double_points.begin(), s.double_points.end());
  if (distinct.size() != k) throw std::invalid_argument("repeated double point");
  Integer total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> flips;
    int negatives = 0;
    for (std::size_t t = 0; t < k; ++t) {
      int want = (mask >> t) & 1 ? -1 : 1;
      negatives += want < 0;
      if (s.diagram.sign(s.double_points[t]) != want) flips.push_back(s.double_points[t]);
    }
    Integer v = evaluate(f, switch_crossings(s.diagram, flips), options);
    total += negatives % 2 ? -v : v;
  }
  return total;
}

}  // namespace platlab
