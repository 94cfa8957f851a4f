#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "platlab/braid.hpp"
#include "platlab/equivalence.hpp"
#include "support.hpp"

using namespace platlab;

namespace {

LinkDiagram hopf() { return plat_closure(parse_braid("s2 s2", 4)); }
LinkDiagram whitehead() { return plat_closure(parse_braid(support::kWhiteheadBraid, 4)); }

}  // namespace

TEST_CASE("certificate validation") {
  CHECK_NOTHROW(validate(Certificate{hopf(), {{0}}, LinkTarget::unlink(2)}));
  CHECK_THROWS_AS(validate(Certificate{hopf(), {}, LinkTarget::unlink(2)}), CertificateError);
  CHECK_THROWS_AS(validate(Certificate{hopf(), {{}}, LinkTarget::unlink(2)}), CertificateError);
  CHECK_THROWS_AS(validate(Certificate{hopf(), {{0}, {0}}, LinkTarget::unlink(2)}), CertificateError);
  CHECK_THROWS_AS(validate(Certificate{hopf(), {{2}}, LinkTarget::unlink(2)}), CertificateError);
  CHECK_THROWS_AS(validate(Certificate{hopf(), {{0}}, LinkTarget::unlink(3)}), CertificateError);
}

TEST_CASE("certificate json") {
  Certificate c{whitehead(), support::kWhiteheadCollection, LinkTarget::unlink(2)};
  auto j = certificate_to_json(c);
  CHECK(j["target"] == "unlink:2");
  CHECK(j["collection"][0][0] == 1);
  Certificate back = certificate_from_json(j);
  CHECK(back.base == c.base);
  CHECK(back.collection == c.collection);
  CHECK(back.m() == 1);

  CHECK_THROWS_AS(parse_certificate("{"), CertificateError);
  CHECK_THROWS_AS(parse_certificate(R"({"pd": {}, "collection": []})"), CertificateError);
  j["target"] = "circle:2";
  CHECK_THROWS_AS(certificate_from_json(j), CertificateError);
  j["target"] = "unlink:2";
  j["collection"] = {{1, 2}, {2}};
  CHECK_THROWS_AS(certificate_from_json(j), CertificateError);

  // an explicit diagram as the target
  Certificate d{hopf(), {{0}}, LinkTarget::of(LinkDiagram::unlink(2))};
  CHECK(certificate_from_json(certificate_to_json(d)).target.diagram.num_components() == 2);
}

TEST_CASE("verify certificates") {
  // the kinked unknot: switching a kink leaves an unknot
  LinkDiagram kinks = parse_gauss("O1 U1 O2 U2 ; + -");
  auto r = verify_certificate(Certificate{kinks, {{0}, {1}}, LinkTarget::unlink(1)});
  CHECK(r.verdict == Verdict::Verified);
  CHECK(r.selections.size() == 3);
  CHECK(r.selections[0].selection == 1);
  CHECK(r.selections[2].selection == 3);

  CHECK(verify_certificate(Certificate{hopf(), {{0}}, LinkTarget::unlink(2)}).verdict == Verdict::Verified);

  auto w = verify_certificate(Certificate{whitehead(), support::kWhiteheadCollection, LinkTarget::unlink(2)});
  CHECK(w.verdict == Verdict::Verified);
  for (const auto& s : w.selections) CHECK(s.crossings_after_simplify == 0);

  // switching both Hopf crossings gives the mirror Hopf link
  auto bad = verify_certificate(Certificate{hopf(), {{0}, {1}}, LinkTarget::unlink(2)});
  CHECK(bad.verdict == Verdict::Refuted);
  CHECK(bad.selections[2].verdict == Verdict::Refuted);
  CHECK(bad.selections[2].reason.find("linking") != std::string::npos);

  // a single Whitehead pair leaves the other clasp in place
  auto half = verify_certificate(Certificate{whitehead(), {support::kWhiteheadCollection[0]}, LinkTarget::of(whitehead())});
  CHECK(half.verdict == Verdict::Refuted);

  // target given as a diagram
  LinkDiagram mirror = switch_crossings(hopf(), std::vector<int>{0, 1});
  auto to_mirror = verify_certificate(Certificate{hopf(), {{0, 1}}, LinkTarget::of(mirror)});
  CHECK(to_mirror.verdict == Verdict::Verified);
}

TEST_CASE("verified certificates keep profiles") {
  Certificate w{whitehead(), support::kWhiteheadCollection, LinkTarget::unlink(2)};
  REQUIRE(verify_certificate(w).verdict == Verdict::Verified);
  auto p = m_equivalence_implies_profile(w, 1);
  CHECK(p.agree);
  CHECK(p.base.linking == p.target.linking);
  // beyond order m the certificate says nothing, and c_3 differs
  CHECK_FALSE(m_equivalence_implies_profile(w, 3).agree);

  Certificate h{hopf(), {{0}}, LinkTarget::unlink(2)};
  CHECK(m_equivalence_implies_profile(h, 0).agree);

  auto built = support::build_certificate(
      support::bracket_expr(support::bracket_expr(support::leaf_expr(0), support::leaf_expr(1)), support::leaf_expr(2)),
      {{1, 3, 1}, {2, 3, -1}, {3, 6, 1}}, 6);
  auto r = verify_certificate(built.certificate);
  CHECK(r.verdict == Verdict::Verified);
  CHECK(r.selections.size() == 7);
  CHECK(m_equivalence_implies_profile(built.certificate, 2).agree);
}

TEST_CASE("brunnian") {
  CHECK(is_brunnian(LinkDiagram::unlink(3)).brunnian);
  CHECK(is_brunnian(hopf()).brunnian);
  CHECK(is_brunnian(whitehead()).brunnian);
  CHECK(is_brunnian(parse_pd_json(support::kWhiteheadPd)).brunnian);
  CHECK(is_brunnian(plat_closure(support::borromean_braid())).brunnian);

  // Hopf link plus a far away circle
  BrunnianReport r = is_brunnian(plat_closure(parse_braid("s2 s2", 6)));
  CHECK_FALSE(r.brunnian);
  CHECK_FALSE(r.inconclusive);
  CHECK(r.witness == std::vector<int>{1, 2});

  BrunnianOptions weak;
  weak.weak = true;
  CHECK(is_brunnian(plat_closure(support::borromean_braid()), weak).brunnian);
  CHECK_THROWS(is_brunnian(LinkDiagram::unlink(1)));
}

TEST_CASE("theorem 1 reports") {
  for (int m = 0; m <= 3; ++m) {
    auto r = theorem1_check(plat_closure(BraidWord(4)), m);
    CHECK(r.mu_vanish_m1);
    CHECK(r.mu_vanish_m2);
    CHECK(r.profile.matches_unlink);
    CHECK(r.consistent());
  }

  auto w1 = theorem1_check(whitehead(), 1);
  CHECK(w1.mu_vanish_m2);
  CHECK(w1.profile.matches_unlink);
  CHECK(w1.consistent());

  auto w2 = theorem1_check(whitehead(), 2);
  CHECK(w2.mu_vanish_m1);
  CHECK_FALSE(w2.mu_vanish_m2);
  REQUIRE(w2.first_nonzero.has_value());
  CHECK(w2.first_nonzero->sequence.size() == 4);
  CHECK(w2.profile.matches_unlink);
  CHECK_FALSE(w2.next_profile.matches_unlink);
  CHECK(abs(w2.next_profile.conway[3]) == 1);
  CHECK(w2.consistent());

  auto h = theorem1_check(hopf(), 0);
  CHECK_FALSE(h.mu_vanish_m2);
  CHECK(h.consistent());
}

TEST_CASE("triviality scan") {
  CHECK(corollary32_scan(plat_closure(BraidWord(6))).status == TrivialityStatus::TrivialCertified);
  CHECK(corollary32_scan(plat_closure(support::commutator(pure_generator(4, 1, 3), pure_generator(4, 1, 3)))).status ==
        TrivialityStatus::TrivialCertified);

  auto h = corollary32_scan(hopf());
  CHECK(h.status == TrivialityStatus::Nontrivial);
  CHECK(h.first_nonzero->sequence == std::vector<int>{1, 2});

  auto w = corollary32_scan(whitehead());
  CHECK(w.status == TrivialityStatus::Nontrivial);
  CHECK(w.first_nonzero->sequence.size() == 4);

  // all mu-bar through the cap vanish but the diagram does not simplify
  auto u = corollary32_scan(whitehead(), 2);
  CHECK(u.status == TrivialityStatus::Undetermined);
  CHECK(to_string(u.status) == "undetermined at cap");
}
