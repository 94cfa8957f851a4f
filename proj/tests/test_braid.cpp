#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "platlab/braid.hpp"
#include "platlab/invariants.hpp"
#include "support.hpp"

using namespace platlab;

namespace {

// Where each strand ends up, by walking the letters and swapping positions.
std::vector<int> permutation_oracle(const BraidWord& b) {
  std::vector<int> at(b.strands());  // at[position] = strand
  for (int p = 0; p < b.strands(); ++p) at[p] = p;
  for (const auto& l : b.letters()) std::swap(at[l.generator - 1], at[l.generator]);
  std::vector<int> perm(b.strands());
  for (int p = 0; p < b.strands(); ++p) perm[at[p]] = p;
  return perm;
}

FreeWord x(int rank, int i) { return FreeWord(rank, {i}); }

}  // namespace

TEST_CASE("braid syntax") {
  BraidWord b = parse_braid("s1 s2^-1, s3^2", 4);
  CHECK(b.length() == 4);
  CHECK(to_string(b) == "s1 s2^-1 s3 s3");
  CHECK(parse_braid(to_string(b), 4) == b);
  CHECK(parse_braid("", 4).length() == 0);
  CHECK(parse_braid("A(1,3)", 4) == pure_generator(4, 1, 3));
  CHECK(to_string(pure_generator(4, 1, 3)) == "s2 s1 s1 s2^-1");
  CHECK(parse_braid("A(2,4)^-2", 4) == pure_generator(4, 2, 4, -2));

  CHECK_THROWS_AS(parse_braid("s", 4), ParseError);
  CHECK_THROWS_AS(parse_braid("s1 t2", 4), ParseError);
  CHECK_THROWS_AS(parse_braid("s4", 4), BraidError);
  CHECK_THROWS_AS(parse_braid("A(3,3)", 4), BraidError);
  CHECK_THROWS_AS(parse_braid("A(1,5)", 4), BraidError);
}

TEST_CASE("permutations compose like the strand walk") {
  std::mt19937 g(3);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 6;
    BraidWord a = support::random_braid(g, n, t % 9);
    BraidWord b = support::random_braid(g, n, t % 7);
    CHECK(a.permutation() == permutation_oracle(a));
    auto pa = a.permutation(), pb = b.permutation(), pab = (a * b).permutation();
    for (int s = 0; s < n; ++s) CHECK(pab[s] == pb[pa[s]]);
    auto pinv = a.inverse().permutation();
    for (int s = 0; s < n; ++s) CHECK(pinv[pa[s]] == s);
  }
}

TEST_CASE("pure generators") {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        BraidWord a = pure_generator(n, i, j);
        CHECK(is_pure(a));
        CHECK(a.length() == static_cast<std::size_t>(2 * (j - i)));
      }
    }
  }
  CHECK_FALSE(is_pure(parse_braid("s1", 2)));
  CHECK(is_pure(parse_braid("s1 s2 s1 s2^-1 s1^-1 s2^-1", 3)));
}

TEST_CASE("artin action") {
  BraidWord s1 = parse_braid("s1", 2);
  CHECK(to_string(artin_action(s1, x(2, 1))) == "x1 x2 x1^-1");
  CHECK(to_string(artin_action(s1, x(2, 2))) == "x1");
  BraidWord s1inv = parse_braid("s1^-1", 2);
  CHECK(to_string(artin_action(s1inv, x(2, 1))) == "x2");
  CHECK(to_string(artin_action(s1inv, x(2, 2))) == "x2^-1 x1 x2");

  BraidWord lhs = parse_braid("s1 s2 s1", 3), rhs = parse_braid("s2 s1 s2", 3);
  BraidWord far1 = parse_braid("s1 s3", 4), far2 = parse_braid("s3 s1", 4);
  for (int i = 1; i <= 3; ++i) CHECK(artin_action(lhs, x(3, i)) == artin_action(rhs, x(3, i)));
  for (int i = 1; i <= 4; ++i) CHECK(artin_action(far1, x(4, i)) == artin_action(far2, x(4, i)));

  std::mt19937 g(11);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + t % 4;
    BraidWord a = support::random_braid(g, n, 5), b = support::random_braid(g, n, 5);
    FreeWord w = support::random_word(g, n, 6);
    // letters act left to right
    CHECK(artin_action(a * b, w) == artin_action(b, artin_action(a, w)));
    CHECK(artin_action(a.inverse(), artin_action(a, w)) == reduce(w));
    // the product x1 x2 ... xn is fixed
    std::vector<Letter> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    FreeWord product(n, all);
    CHECK(artin_action(a, product) == product);
  }
}

TEST_CASE("artin representation modulo the lower central series") {
  CHECK(artin_rep_trivial(BraidWord(3), 5));
  BraidWord a12 = pure_generator(3, 1, 2), a23 = pure_generator(3, 2, 3);
  CHECK(artin_rep_trivial(a12, 1));
  CHECK_FALSE(artin_rep_trivial(a12, 2));
  BraidWord c = support::commutator(a12, a23);
  CHECK(artin_rep_trivial(c, 2));
  CHECK_FALSE(artin_rep_trivial(c, 3));
  CHECK_THROWS_AS(artin_rep_trivial(parse_braid("s1", 3), 2), BraidError);
}

TEST_CASE("plat closure") {
  LinkDiagram unlink = plat_closure(BraidWord(6));
  CHECK(unlink.num_components() == 3);
  CHECK(unlink.num_crossings() == 0);

  LinkDiagram hopf = plat_closure(parse_braid("s2 s2", 4));
  CHECK(hopf.num_components() == 2);
  CHECK(hopf.num_crossings() == 2);
  CHECK(std::abs(linking_matrix(hopf)[0][1]) == 1);
  CHECK(is_planar(hopf));

  CHECK_THROWS_AS(plat_closure(parse_braid("s1", 4)), BraidError);
  CHECK_THROWS_AS(plat_closure(BraidWord(3)), BraidError);
}

TEST_CASE("plat linking numbers from the generator list") {
  // A(i,j)^e adds e to lk when strands i and j run the same way and -e
  // otherwise; odd strands run down, even strands up.
  std::mt19937 g(5);
  std::uniform_int_distribution<int> sg(0, 1);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + t % 3, strands = 2 * n;
    std::uniform_int_distribution<int> pick(1, strands);
    BraidWord b(strands);
    LinkingMatrix expected(n, std::vector<long>(n, 0));
    for (int k = 0; k < 4; ++k) {
      int i = pick(g), j = pick(g);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      int e = sg(g) ? 1 : -1;
      b = b * pure_generator(strands, i, j, e);
      int ci = (i - 1) / 2, cj = (j - 1) / 2;
      if (ci == cj) continue;
      int dir = (i % 2 == j % 2) ? 1 : -1;
      expected[ci][cj] += e * dir;
      expected[cj][ci] += e * dir;
    }
    LinkDiagram d = plat_closure(b);
    CHECK(linking_matrix(d) == expected);
    CHECK(is_planar(d));
  }
}

TEST_CASE("trace closure") {
  LinkDiagram trefoil = trace_closure(parse_braid("s1 s1 s1", 2));
  CHECK(trefoil.num_components() == 1);
  CHECK(self_writhe(trefoil, 0) == 3);
  LinkDiagram two = trace_closure(parse_braid("s1 s1", 2));
  CHECK(two.num_components() == 2);
  CHECK(linking_matrix(two)[0][1] == 1);
  CHECK(ordinary_closure(BraidWord(3)).num_components() == 3);
  CHECK_THROWS_AS(ordinary_closure(parse_braid("s1", 2)), BraidError);
}
