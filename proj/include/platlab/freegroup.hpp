#pragma once

// Free group F(x_1..x_n): words, commutators, the truncated Magnus expansion,
// lower-central-series depth and decomposition into simple commutators.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "platlab/integer.hpp"

namespace platlab {

inline constexpr int kDefaultMagnusCap = 8;

class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A letter is a signed generator index: +i is x_i, -i is x_i^-1 (i >= 1).
using Letter = int;

inline int generator_of(Letter l) { return l < 0 ? -l : l; }
inline int exponent_of(Letter l) { return l < 0 ? -1 : 1; }

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank) : rank_(rank) {}
  // Stores the spelling as given; use reduce() for the reduced form.
  FreeWord(int rank, std::vector<Letter> letters);

  static FreeWord generator(int rank, int index, int exponent = 1);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_reduced() const;

  // Exponent sum of each generator (index 0 is x_1).
  std::vector<long> exponent_sums() const;

  // Same letters, viewed in a larger free group.
  FreeWord with_rank(int rank) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

FreeWord reduce(const FreeWord& w);
FreeWord multiply(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& w);
// [u,v] = u v u^-1 v^-1, reduced.
FreeWord commutator(const FreeWord& u, const FreeWord& v);
FreeWord power(const FreeWord& w, long exponent);

// Generators x1..xn, `^k` powers, whitespace juxtaposition, `[u,v]`
// commutators and parentheses; `1` is the empty word. A rank of 0 infers the
// rank from the largest generator index. The result is reduced.
FreeWord parse_word(std::string_view text, int rank = 0);
// Inverse of parse_word on reduced words; the empty word prints as `1`.
std::string to_string(const FreeWord& w);

// Truncated noncommutative power series in X_1..X_n with integer coefficients.
// Degree-k coefficients are stored densely, indexed by the base-n number of
// the monomial X_{i_1}...X_{i_k}.
class MagnusSeries {
 public:
  MagnusSeries(int rank, int cap);  // the zero series
  static MagnusSeries one(int rank, int cap);

  int rank() const { return rank_; }
  int cap() const { return cap_; }

  const Integer& coefficient(std::span<const int> monomial) const;
  void set_coefficient(std::span<const int> monomial, Integer value);
  std::span<const Integer> homogeneous(int degree) const { return degrees_[degree]; }

  // Right multiplication by (1 + X_i)^{exponent}, exponent = +-1.
  void multiply_generator(int generator, int exponent);

  MagnusSeries operator*(const MagnusSeries& other) const;
  MagnusSeries operator-(const MagnusSeries& other) const;
  MagnusSeries inverse() const;  // requires constant term 1

  bool is_one() const;
  // Smallest k >= 1 with a nonzero degree-k coefficient, or cap+1 if none.
  int min_positive_degree() const;
  // Nonzero coefficients keyed by monomial (1-based generator indices).
  std::map<std::vector<int>, Integer> terms() const;

  std::vector<int> monomial_of(int degree, std::size_t index) const;
  std::size_t index_of(std::span<const int> monomial) const;

  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

 private:
  int rank_;
  int cap_;
  std::vector<std::vector<Integer>> degrees_;
};

MagnusSeries magnus(const FreeWord& w, int cap = kDefaultMagnusCap);
std::string to_string(const MagnusSeries& s);

struct LcsDepth {
  int depth;
  bool saturated;  // Magnus expansion is 1 through the cap: depth is ">= cap"
};

// Largest m <= cap with w in F^(m), read off the Magnus expansion.
LcsDepth lcs_depth(const FreeWord& w, int cap = kDefaultMagnusCap);

class CommutatorTree {
 public:
  static CommutatorTree leaf(int generator, int exponent = 1);
  static CommutatorTree bracket(CommutatorTree left, CommutatorTree right);

  bool is_leaf() const { return node_->left == nullptr; }
  int generator() const { return node_->generator; }
  int exponent() const { return node_->exponent; }
  CommutatorTree left() const { return CommutatorTree(node_->left); }
  CommutatorTree right() const { return CommutatorTree(node_->right); }
  int length() const { return node_->length; }
  int max_generator() const { return node_->max_generator; }

  // Every bracket has at least one leaf child.
  bool is_simple() const;
  // Bracket(A,B)^-1 = Bracket(B,A); a leaf flips its exponent.
  CommutatorTree inverse() const;

  friend bool operator==(const CommutatorTree& a, const CommutatorTree& b);

 private:
  struct Node {
    int generator = 0;
    int exponent = 0;
    int length = 1;
    int max_generator = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit CommutatorTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

FreeWord flatten(const CommutatorTree& t, int rank);
FreeWord flatten(std::span<const CommutatorTree> product, int rank);
std::string to_string(const CommutatorTree& t);

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DecomposeOptions {
  int cap = kDefaultMagnusCap;  // Magnus cap certifying membership in F^(m)
  std::size_t node_budget = 20000;
  std::size_t table_limit = 400000;  // max candidate trees kept in memory
};

// Simple commutators T_1..T_r of length >= m whose flattened product freely
// reduces to reduce(w). Throws DecompositionError when w is not in F^(m) at
// the cap, or when the search budget runs out.
std::vector<CommutatorTree> decompose_simple_quasi(const FreeWord& w, int m,
                                                   const DecomposeOptions& options = {});

// Collected form modulo F^(cap+1): generators in index order followed by
// standard Lyndon bracketings in increasing degree, each with an exponent.
struct CollectedFactor {
  CommutatorTree tree;
  long exponent;
};
std::vector<CollectedFactor> collect(const MagnusSeries& series);
FreeWord collected_word(std::span<const CollectedFactor> factors, int rank);

// Standard bracketing of a Lyndon word (1-based letters); its Lie polynomial
// is the word itself plus lexicographically larger words.
CommutatorTree lyndon_bracketing(std::span<const int> lyndon_word);
bool is_lyndon(std::span<const int> word);

}  // namespace platlab
