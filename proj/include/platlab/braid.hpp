#pragma once

// Braid words on k strands, the Artin action on F(x_1..x_k) and the plat and
// ordinary closures. sigma_i is the right-handed crossing: the strand coming
// from position i+1 passes over the strand from position i.

#include <string>
#include <string_view>
#include <vector>

#include "platlab/diagram.hpp"
#include "platlab/freegroup.hpp"

namespace platlab {

class BraidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BraidLetter {
  int generator;  // 1..strands-1
  int sign;       // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  // perm[p] = final position of the strand that starts at position p (0-based).
  std::vector<int> permutation() const;
  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& other) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// The pure braid generator A(i,j) = s_{j-1}...s_{i+1} s_i^2 s_{i+1}^-1...s_{j-1}^-1.
BraidWord pure_generator(int strands, int i, int j, int exponent = 1);

// Tokens `s<i>`, `s<i>^-1`, `s<i>^k` and `A(i,j)^k`, separated by whitespace.
BraidWord parse_braid(std::string_view text, int strands);
std::string to_string(const BraidWord& b);

bool is_pure(const BraidWord& b);

// s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i; letters act left to right.
FreeWord artin_action(const BraidWord& b, const FreeWord& w);
// True when artin_action(b, x_i) x_i^-1 lies in F^(m+1) for every i.
bool artin_rep_trivial(const BraidWord& b, int m);

// Caps strands (2i-1, 2i) at top and bottom. Odd strands run down, even
// strands run up; component i is strand 2i-1 followed by strand 2i.
LinkDiagram plat_closure(const BraidWord& b);
// All strands run down; component p is strand p.
LinkDiagram ordinary_closure(const BraidWord& b);
// Trace closure of any braid (components follow the permutation cycles).
LinkDiagram trace_closure(const BraidWord& b);

}  // namespace platlab
