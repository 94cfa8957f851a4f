#pragma once

// Helpers shared by the unit tests and the acceptance run: independent
// oracles, random generators and the small example corpus.

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "platlab/braid.hpp"
#include "platlab/diagram.hpp"
#include "platlab/equivalence.hpp"
#include "platlab/freegroup.hpp"

namespace support {

using namespace platlab;

// Coefficient of X_{mono} in the Magnus expansion computed straight from the
// letters: each letter x^e contributes either nothing or a run of r >= 1
// copies of its X with coefficient 1 (e = +1, r = 1 only) or (-1)^r (e = -1).
inline long long magnus_oracle(const FreeWord& word, const std::vector<int>& mono) {
  std::vector<long long> ways(mono.size() + 1, 0);
  ways[0] = 1;
  for (Letter l : word.letters()) {
    std::vector<long long> next = ways;
    for (std::size_t j = 0; j < mono.size(); ++j) {
      if (ways[j] == 0) continue;
      for (std::size_t r = 1; j + r <= mono.size(); ++r) {
        if (mono[j + r - 1] != generator_of(l)) break;
        if (l > 0) {
          if (r == 1) next[j + 1] += ways[j];
          break;
        }
        next[j + r] += (r % 2 ? -1 : 1) * ways[j];
      }
    }
    ways = std::move(next);
  }
  return ways[mono.size()];
}

inline FreeWord random_word(std::mt19937& g, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, rank), sg(0, 1);
  std::vector<Letter> letters;
  int n = len(g);
  for (int i = 0; i < n; ++i) letters.push_back(sg(g) ? gen(g) : -gen(g));
  return FreeWord(rank, letters);
}

inline CommutatorTree random_simple(std::mt19937& g, int rank, int length) {
  std::uniform_int_distribution<int> gen(1, rank), sg(0, 1);
  auto leaf = [&] { return CommutatorTree::leaf(gen(g), sg(g) ? 1 : -1); };
  CommutatorTree t = leaf();
  for (int k = 2; k <= length; ++k) t = sg(g) ? CommutatorTree::bracket(t, leaf()) : CommutatorTree::bracket(leaf(), t);
  return t;
}

// Product of random pure generators A(i,j)^(+-1) with at most max_crossings
// letters (the target length itself is drawn uniformly from 2..max).
inline BraidWord random_pure_braid(std::mt19937& g, int strands, int max_crossings) {
  BraidWord w(strands);
  std::uniform_int_distribution<int> pick(1, strands), sg(0, 1);
  int target = std::uniform_int_distribution<int>(2, max_crossings)(g);
  for (int tries = 0; tries < 50; ++tries) {
    int i = pick(g), j = pick(g);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    BraidWord p = pure_generator(strands, i, j, sg(g) ? 1 : -1);
    if (static_cast<int>(w.length() + p.length()) > target) continue;
    w = w * p;
  }
  return w;
}

inline BraidWord random_braid(std::mt19937& g, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1), sg(0, 1);
  std::vector<BraidLetter> letters;
  for (int i = 0; i < length; ++i) letters.push_back({gen(g), sg(g) ? 1 : -1});
  return BraidWord(strands, letters);
}

// Trace closure of a random braid with a few cancelling pairs and kinks mixed
// in, so simplify has something to do.
inline LinkDiagram random_diagram(std::mt19937& g, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1), sg(0, 1), coin(0, 3);
  std::vector<BraidLetter> letters;
  while (static_cast<int>(letters.size()) < length) {
    int i = gen(g), s = sg(g) ? 1 : -1;
    letters.push_back({i, s});
    if (coin(g) == 0 && static_cast<int>(letters.size()) + 1 < length) letters.push_back({i, -s});
  }
  return trace_closure(BraidWord(strands, letters));
}

inline BraidWord commutator(const BraidWord& a, const BraidWord& b) { return a * b * a.inverse() * b.inverse(); }

// Pure braid expressions built from generators A(i,j)^e by commutators. Each
// copy of a leaf contains a square s_i^(+-2); switching one crossing of it in
// every copy of a leaf kills that leaf, so the leaves give crossing sets of a
// certificate to the unlink.
struct Expr {
  int leaf = -1;  // index into the leaf list, or -1 for a commutator
  std::vector<Expr> kids;
};

struct Leaf {
  int i, j, exponent;
};

inline void emit(const Expr& e, const std::vector<Leaf>& leaves, int strands, bool inverse, std::vector<BraidLetter>& out,
                 std::vector<std::vector<int>>& sets) {
  if (e.leaf >= 0) {
    const Leaf& l = leaves[e.leaf];
    BraidWord w = pure_generator(strands, l.i, l.j, inverse ? -l.exponent : l.exponent);
    // A(i,j) = s_{j-1}..s_{i+1} s_i^2 s_{i+1}^-1..; the square starts after j-1-i letters
    sets[e.leaf].push_back(static_cast<int>(out.size()) + (l.j - 1 - l.i));
    out.insert(out.end(), w.letters().begin(), w.letters().end());
    return;
  }
  // [a,b] = a b a^-1 b^-1 and its inverse b a b^-1 a^-1
  const Expr& a = e.kids[0];
  const Expr& b = e.kids[1];
  if (!inverse) {
    emit(a, leaves, strands, false, out, sets);
    emit(b, leaves, strands, false, out, sets);
    emit(a, leaves, strands, true, out, sets);
    emit(b, leaves, strands, true, out, sets);
  } else {
    emit(b, leaves, strands, false, out, sets);
    emit(a, leaves, strands, false, out, sets);
    emit(b, leaves, strands, true, out, sets);
    emit(a, leaves, strands, true, out, sets);
  }
}

inline Expr leaf_expr(int k) { return Expr{k, {}}; }
inline Expr bracket_expr(Expr a, Expr b) { return Expr{-1, {std::move(a), std::move(b)}}; }

struct Built {
  BraidWord braid;
  Certificate certificate;
};

inline Built build_certificate(const Expr& e, const std::vector<Leaf>& leaves, int strands) {
  std::vector<BraidLetter> letters;
  std::vector<std::vector<int>> sets(leaves.size());
  emit(e, leaves, strands, false, letters, sets);
  BraidWord b(strands, letters);
  Certificate c{plat_closure(b), sets, LinkTarget::unlink(strands / 2)};
  return {b, c};
}

// A pure 4-plat of the Whitehead link and a 1-trivializing collection.
inline const char* kWhiteheadBraid = "A(1,3)^-1 A(2,3)^-1";
inline const std::vector<std::vector<int>> kWhiteheadCollection = {{0, 3}, {1, 4}};

// The usual 5-crossing Whitehead diagram.
inline const char* kWhiteheadPd =
    R"({"crossings":[[6,1,7,2],[10,7,5,8],[4,5,1,6],[2,10,3,9],[8,4,9,3]],)"
    R"("signs":[-1,-1,-1,1,1],"components":[[1,2,3,4],[5,6,7,8,9,10]]})";

inline BraidWord borromean_braid() { return commutator(pure_generator(6, 2, 3), pure_generator(6, 3, 5)); }

// |Alexander polynomial| at t = e^(i theta) from the reduced Burau matrix of
// a braid: Delta(t) (1 - t^n) / (1 - t) = det(I - B(t)).
inline double burau_alexander_modulus(const BraidWord& b, double theta) {
  using C = std::complex<double>;
  const int n = b.strands();
  const C t = std::polar(1.0, theta);
  const int k = n - 1;
  if (k == 0) return 1.0;
  std::vector<std::vector<C>> m(k, std::vector<C>(k, 0.0));
  for (int i = 0; i < k; ++i) m[i][i] = 1.0;
  using Matrix = std::vector<std::vector<C>>;
  auto identity = [&] {
    Matrix g(k, std::vector<C>(k, 0.0));
    for (int r = 0; r < k; ++r) g[r][r] = 1.0;
    return g;
  };
  auto invert = [&](Matrix a) {
    Matrix inv = identity();
    for (int c = 0; c < k; ++c) {
      int piv = c;
      for (int r = c + 1; r < k; ++r)
        if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
      std::swap(a[piv], a[c]);
      std::swap(inv[piv], inv[c]);
      C d = a[c][c];
      for (int s = 0; s < k; ++s) {
        a[c][s] /= d;
        inv[c][s] /= d;
      }
      for (int r = 0; r < k; ++r) {
        if (r == c) continue;
        C f = a[r][c];
        for (int s = 0; s < k; ++s) {
          a[r][s] -= f * a[c][s];
          inv[r][s] -= f * inv[c][s];
        }
      }
    }
    return inv;
  };
  // s_i acts on rows i-1..i+1 by [[1, t, 0], [0, -t, 0], [0, 1, 1]], clipped
  // at the ends.
  auto generator = [&](int i, int sign) {
    Matrix g = identity();
    int r = i - 1;
    g[r][r] = -t;
    if (r > 0) g[r - 1][r] = t;
    if (r + 1 < k) g[r + 1][r] = 1.0;
    return sign > 0 ? g : invert(g);
  };
  for (const auto& l : b.letters()) {
    auto g = generator(l.generator, l.sign);
    std::vector<std::vector<C>> p(k, std::vector<C>(k, 0.0));
    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s)
        for (int q = 0; q < k; ++q) p[r][s] += m[r][q] * g[q][s];
    m = std::move(p);
  }
  // det(I - m) by Gaussian elimination with partial pivoting
  std::vector<std::vector<C>> a(k, std::vector<C>(k));
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s) a[r][s] = (r == s ? 1.0 : 0.0) - m[r][s];
  C det = 1.0;
  for (int c = 0; c < k; ++c) {
    int piv = c;
    for (int r = c + 1; r < k; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) < 1e-14) return 0.0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < k; ++r) {
      C f = a[r][c] / a[c][c];
      for (int s = c; s < k; ++s) a[r][s] -= f * a[c][s];
    }
  }
  C norm = (1.0 - std::pow(t, n)) / (1.0 - t);
  return std::abs(det / norm);
}

}  // namespace support
