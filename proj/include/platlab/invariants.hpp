#pragma once

// Linking numbers, Milnor mu-bar invariants, the Conway polynomial and
// finite type evaluation on singular links.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "platlab/diagram.hpp"
#include "platlab/freegroup.hpp"
#include "platlab/integer.hpp"

namespace platlab {

inline constexpr int kDefaultConwayBound = 16;
inline constexpr std::size_t kConwaySimplifyBudget = 1000;
inline constexpr std::size_t kConwayNodeBudget = 200000;

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using LinkingMatrix = std::vector<std::vector<long>>;

// lk(i,j) = half the signed count of crossings between components i and j.
LinkingMatrix linking_matrix(const LinkDiagram& d);

struct MilnorValue {
  std::vector<int> sequence;  // 1-based component indices
  Integer value;              // reduced modulo delta when delta > 0
  Integer delta;              // 0 means the value is an honest integer
};

// Magnus expansions of the longitudes, computed once, from which any mu-bar
// with length <= cap + 1 is read off.
class MilnorInvariants {
 public:
  MilnorInvariants(const LinkDiagram& d, int cap);

  int components() const { return static_cast<int>(series_.size()); }
  int max_length() const { return cap_ + 1; }

  // Coefficient of X_{i_1}...X_{i_{k-1}} in M(W_{i_k}); 0 for length 1.
  Integer raw(const std::vector<int>& sequence) const;
  MilnorValue mu_bar(const std::vector<int>& sequence) const;
  // gcd of raw values over cyclic permutations of proper subsequences.
  Integer delta(const std::vector<int>& sequence) const;

  // Largest L <= max_length() such that every mu-bar of length <= L is zero.
  int vanishing_length() const;
  bool vanish_through(int length) const { return vanishing_length() >= length; }
  // A nonzero mu-bar of the shortest nonvanishing length (its delta is 0),
  // first in lexicographic order; empty when all vanish through the cap.
  std::optional<MilnorValue> first_nonzero() const;

  // Every sequence of the given length, in lexicographic order.
  std::vector<MilnorValue> all_of_length(int length) const;

 private:
  void check(const std::vector<int>& sequence) const;
  int cap_;
  std::vector<MagnusSeries> series_;
};

// Computes mu-bar(I) with a cap of |I|.
MilnorValue mu_bar(const LinkDiagram& d, const std::vector<int>& sequence);

struct ConwayPolynomial {
  std::vector<Integer> coefficients;  // coefficients[k] multiplies z^k

  Integer coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(coefficients.size()) ? coefficients[k] : Integer(0);
  }
  bool is_zero() const;
  friend bool operator==(const ConwayPolynomial& a, const ConwayPolynomial& b);
};
std::string to_string(const ConwayPolynomial& p);

struct ConwayOptions {
  int crossing_bound = kDefaultConwayBound;
  std::size_t simplify_budget = kConwaySimplifyBudget;
  std::size_t node_budget = kConwayNodeBudget;
};

// Skein recursion nabla(D) = nabla(D switched at x) + sign(x) z nabla(D_0) at
// the first crossing met from below, walking the components in order. Throws
// ResourceError above the crossing bound.
ConwayPolynomial conway(const LinkDiagram& d, const ConwayOptions& options = {});
// Only z^0..z^degree. Smoothing raises the degree, so branches below the
// target are cut off; there is no crossing bound, only the node budget.
ConwayPolynomial conway_truncated(const LinkDiagram& d, int degree, const ConwayOptions& options = {});

struct FiniteTypeProfile {
  int order = 0;
  int components = 0;
  LinkingMatrix linking;              // empty when order < 1
  std::vector<Integer> conway;        // c_0..c_order
  bool matches_unlink = false;
};

// Linking numbers (order 1) and Conway coefficients c_0..c_m.
FiniteTypeProfile finite_type_profile(const LinkDiagram& d, int m, const ConwayOptions& options = {});
FiniteTypeProfile unlink_profile(int components, int m);
bool same_profile(const FiniteTypeProfile& a, const FiniteTypeProfile& b);

struct InvariantHandle {
  enum class Kind { Linking, Conway } kind;
  int i = 0;  // linking: 1-based components i, j; Conway: degree in i
  int j = 0;

  static InvariantHandle linking_number(int i, int j) { return {Kind::Linking, i, j}; }
  static InvariantHandle conway_coefficient(int k) { return {Kind::Conway, k, 0}; }
};

Integer evaluate(const InvariantHandle& f, const LinkDiagram& d, const ConwayOptions& options = {});

struct SingularLink {
  LinkDiagram diagram;
  std::vector<int> double_points;  // crossing ids
};

// Sum over the 2^k resolutions, each signed by (-1)^(number of negative ones).
Integer vassiliev_eval(const InvariantHandle& f, const SingularLink& s, const ConwayOptions& options = {});

}  // namespace platlab
