#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "platlab/braid.hpp"
#include "platlab/invariants.hpp"
#include "support.hpp"

using namespace platlab;

namespace {

ConwayPolynomial poly(std::vector<int> c) {
  ConwayPolynomial p;
  for (int v : c) p.coefficients.push_back(v);
  while (!p.coefficients.empty() && p.coefficients.back() == 0) p.coefficients.pop_back();
  return p;
}

// |nabla(z)| at z = 2i sin(theta/2), i.e. t^(1/2) - t^(-1/2) with t = e^(i theta).
double conway_modulus(const ConwayPolynomial& p, double theta) {
  std::complex<double> z(0.0, 2.0 * std::sin(theta / 2)), acc = 0.0, power = 1.0;
  for (const auto& c : p.coefficients) {
    acc += c.convert_to<double>() * power;
    power *= z;
  }
  return std::abs(acc);
}

ConwayPolynomial shifted(const ConwayPolynomial& p, int sign) {
  ConwayPolynomial out;
  out.coefficients.assign(p.coefficients.size() + 1, 0);
  for (std::size_t k = 0; k < p.coefficients.size(); ++k) out.coefficients[k + 1] = sign * p.coefficients[k];
  while (!out.coefficients.empty() && out.coefficients.back() == 0) out.coefficients.pop_back();
  return out;
}

ConwayPolynomial minus(const ConwayPolynomial& a, const ConwayPolynomial& b) {
  ConwayPolynomial out;
  std::size_t n = std::max(a.coefficients.size(), b.coefficients.size());
  for (std::size_t k = 0; k < n; ++k) out.coefficients.push_back(a.coefficient(k) - b.coefficient(k));
  while (!out.coefficients.empty() && out.coefficients.back() == 0) out.coefficients.pop_back();
  return out;
}

}  // namespace

TEST_CASE("linking matrix") {
  LinkDiagram hopf = plat_closure(parse_braid("s2 s2", 4));
  auto lk = linking_matrix(hopf);
  CHECK(lk[0][1] == -1);
  CHECK(lk[1][0] == -1);
  CHECK(lk[0][0] == 0);
  CHECK(linking_matrix(trace_closure(parse_braid("s1 s1 s1 s1", 2)))[0][1] == 2);
}

TEST_CASE("conway known values") {
  CHECK(conway(LinkDiagram::unlink(1)) == poly({1}));
  CHECK(conway(LinkDiagram::unlink(2)).is_zero());
  CHECK(conway(trace_closure(parse_braid("s1 s1", 2))) == poly({0, 1}));
  CHECK(conway(plat_closure(parse_braid("s2 s2", 4))) == poly({0, -1}));
  CHECK(conway(trace_closure(parse_braid("s1 s1 s1", 2))) == poly({1, 0, 1}));
  CHECK(conway(trace_closure(parse_braid("s1 s2^-1 s1 s2^-1", 3))) == poly({1, 0, -1}));
  auto wh = conway(parse_pd_json(support::kWhiteheadPd));
  CHECK(abs(wh.coefficient(3)) == 1);
  CHECK(wh.coefficients.size() == 4);
  CHECK(conway(plat_closure(support::borromean_braid())) == poly({0, 0, 0, 0, 1}));
  CHECK(to_string(poly({1, 0, -2, 1})) == "1 - 2*z^2 + z^3");
  CHECK(to_string(poly({})) == "0");
}

TEST_CASE("conway agrees with the burau determinant") {
  std::mt19937 g(12);
  const double thetas[] = {0.7, 1.3, 2.1, 2.9};
  for (int t = 0; t < 80; ++t) {
    int n = 2 + t % 3;
    BraidWord b = support::random_braid(g, n, 2 + t % 11);
    ConwayPolynomial c = conway(trace_closure(b));
    for (double th : thetas) CHECK(conway_modulus(c, th) == doctest::Approx(support::burau_alexander_modulus(b, th)).epsilon(1e-9));
  }
}

TEST_CASE("skein relation on three separately computed diagrams") {
  std::mt19937 g(13);
  for (int t = 0; t < 60; ++t) {
    LinkDiagram d = support::random_diagram(g, 2 + t % 3, 2 + t % 10);
    for (int x = 0; x < d.num_crossings(); ++x) {
      std::vector<int> one{x};
      LinkDiagram other = switch_crossings(d, one);
      const LinkDiagram& plus = d.sign(x) > 0 ? d : other;
      const LinkDiagram& minus_d = d.sign(x) > 0 ? other : d;
      ConwayPolynomial lhs = minus(conway(plus), conway(minus_d));
      ConwayPolynomial rhs = shifted(conway(smooth(d, x)), 1);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("truncated conway") {
  std::mt19937 g(14);
  for (int t = 0; t < 60; ++t) {
    LinkDiagram d = support::random_diagram(g, 2 + t % 3, 2 + t % 12);
    ConwayPolynomial full = conway(d);
    for (int k = 0; k <= 4; ++k) {
      ConwayPolynomial part = conway_truncated(d, k);
      for (int j = 0; j <= k; ++j) CHECK(part.coefficient(j) == full.coefficient(j));
      CHECK(static_cast<int>(part.coefficients.size()) <= k + 1);
    }
  }
  // no crossing bound for the truncated form
  LinkDiagram big = plat_closure(support::commutator(support::commutator(pure_generator(8, 2, 3), pure_generator(8, 3, 5)),
                                                     pure_generator(8, 5, 7)));
  CHECK(big.num_crossings() > kDefaultConwayBound);
  CHECK_THROWS_AS(conway(big), ResourceError);
  CHECK(conway_truncated(big, 3).is_zero());
  ConwayOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(conway_truncated(big, 3, tiny), ResourceError);
}

TEST_CASE("mu-bar of length two is the linking number") {
  std::mt19937 g(15);
  for (int t = 0; t < 60; ++t) {
    LinkDiagram d = plat_closure(support::random_pure_braid(g, 2 * (2 + t % 3), 14));
    auto lk = linking_matrix(d);
    MilnorInvariants mu(d, 3);
    for (int i = 1; i <= d.num_components(); ++i) {
      for (int j = 1; j <= d.num_components(); ++j) {
        if (i == j) continue;
        CHECK(mu.raw({i, j}) == lk[i - 1][j - 1]);
        CHECK(mu.mu_bar({i, j}).delta == 0);
      }
    }
  }
}

TEST_CASE("mu-bar examples") {
  CHECK(abs(mu_bar(plat_closure(parse_braid("s2 s2", 4)), {1, 2}).value) == 1);

  LinkDiagram wh = plat_closure(parse_braid(support::kWhiteheadBraid, 4));
  MilnorInvariants mw(wh, 4);
  CHECK(mw.vanishing_length() == 3);
  MilnorValue v = mw.mu_bar({1, 1, 2, 2});
  CHECK(abs(v.value) == 1);
  CHECK(v.delta == 0);
  CHECK(mw.first_nonzero().has_value());
  // the same value on the usual 5-crossing diagram
  CHECK(mu_bar(parse_pd_json(support::kWhiteheadPd), {1, 1, 2, 2}).value == v.value);

  LinkDiagram bo = plat_closure(support::borromean_braid());
  MilnorInvariants mb(bo, 3);
  CHECK(mb.vanishing_length() == 2);
  CHECK(abs(mb.mu_bar({1, 2, 3}).value) == 1);
  CHECK(mb.mu_bar({1, 2, 3}).delta == 0);

  MilnorInvariants mu(LinkDiagram::unlink(3), 5);
  CHECK(mu.vanishing_length() == 6);
  CHECK_FALSE(mu.first_nonzero().has_value());
  CHECK_THROWS(mu.raw({1, 2, 3, 1, 2, 3, 1}));
  CHECK_THROWS(mu.raw({1, 4}));
}

TEST_CASE("mu-bar cyclic symmetry and indeterminacy") {
  std::mt19937 g(16);
  int nonzero = 0;
  for (int t = 0; t < 80; ++t) {
    BraidWord a = support::random_pure_braid(g, 6, 6), b = support::random_pure_braid(g, 6, 6);
    LinkDiagram d = plat_closure(t % 2 ? support::commutator(a, b) : a * b);
    MilnorInvariants mu(d, 3);
    auto lk = linking_matrix(d);
    Integer expected_delta = 0;
    for (auto v : {lk[0][1], lk[0][2], lk[1][2]}) expected_delta = boost::multiprecision::gcd(expected_delta, Integer(std::abs(v)));
    MilnorValue m123 = mu.mu_bar({1, 2, 3});
    CHECK(m123.delta == expected_delta);
    CHECK(m123.value == mu.mu_bar({2, 3, 1}).value);
    CHECK(m123.value == mu.mu_bar({3, 1, 2}).value);
    // reversing the sequence changes the sign modulo delta
    MilnorValue rev = mu.mu_bar({3, 2, 1});
    if (m123.delta == 0) {
      CHECK(rev.value == -m123.value);
      nonzero += m123.value != 0;
    } else {
      CHECK((rev.value + m123.value) % m123.delta == 0);
    }
  }
  CHECK(nonzero > 0);
}

TEST_CASE("finite type profiles") {
  FiniteTypeProfile u = unlink_profile(2, 3);
  CHECK(u.matches_unlink);
  CHECK(u.conway == std::vector<Integer>{0, 0, 0, 0});

  LinkDiagram hopf = plat_closure(parse_braid("s2 s2", 4));
  CHECK(finite_type_profile(hopf, 0).matches_unlink);
  CHECK_FALSE(finite_type_profile(hopf, 1).matches_unlink);

  LinkDiagram wh = plat_closure(parse_braid(support::kWhiteheadBraid, 4));
  CHECK(finite_type_profile(wh, 2).matches_unlink);
  FiniteTypeProfile p3 = finite_type_profile(wh, 3);
  CHECK_FALSE(p3.matches_unlink);
  CHECK(abs(p3.conway[3]) == 1);
  CHECK(same_profile(finite_type_profile(LinkDiagram::unlink(2), 2), unlink_profile(2, 2)));
  CHECK(finite_type_profile(LinkDiagram::unlink(1), 2).conway[0] == 1);
}

TEST_CASE("finite type evaluation on singular links") {
  LinkDiagram hopf = plat_closure(parse_braid("s2 s2", 4));
  SingularLink one{hopf, {0}};
  CHECK(vassiliev_eval(InvariantHandle::linking_number(1, 2), one) == 1);
  SingularLink two{hopf, {0, 1}};
  CHECK(vassiliev_eval(InvariantHandle::linking_number(1, 2), two) == 0);
  CHECK_THROWS(vassiliev_eval(InvariantHandle::linking_number(1, 2), SingularLink{hopf, {0, 0}}));

  std::mt19937 g(17);
  for (int m = 0; m <= 3; ++m) {
    for (int t = 0; t < 20; ++t) {
      LinkDiagram d = support::random_diagram(g, 2 + t % 3, m + 2 + t % 6);
      std::vector<int> xs(d.num_crossings());
      for (int i = 0; i < d.num_crossings(); ++i) xs[i] = i;
      std::shuffle(xs.begin(), xs.end(), g);
      xs.resize(m + 1);
      CHECK(vassiliev_eval(InvariantHandle::conway_coefficient(m), SingularLink{d, xs}) == 0);
    }
  }
}
