#include "platlab/equivalence.hpp"

#include <set>

namespace platlab {

std::string LinkTarget::describe() const {
  if (unlink_components) return "unlink:" + std::to_string(*unlink_components);
  return gauss_code(diagram);
}

void validate(const Certificate& c) {
  if (c.collection.empty()) throw CertificateError("certificate needs at least one crossing set");
  if (c.collection.size() > 20) throw CertificateError("too many crossing sets");
  std::set<int> used;
  for (std::size_t i = 0; i < c.collection.size(); ++i) {
    const auto& set = c.collection[i];
    if (set.empty()) throw CertificateError("crossing set " + std::to_string(i + 1) + " is empty");
    for (int x : set) {
      if (x < 0 || x >= c.base.num_crossings()) {
        throw CertificateError("crossing " + std::to_string(x + 1) + " is not in the diagram");
      }
      if (!used.insert(x).second) {
        throw CertificateError("crossing " + std::to_string(x + 1) + " appears in more than one place");
      }
    }
  }
  if (c.target.components() != c.base.num_components()) {
    throw CertificateError("target has " + std::to_string(c.target.components()) + " components, diagram has " +
                           std::to_string(c.base.num_components()));
  }
}

namespace {

LinkTarget target_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::string prefix = "unlink:";
    if (s.rfind(prefix, 0) != 0) throw CertificateError("unknown target '" + s + "'");
    int n = 0;
    try {
      n = std::stoi(s.substr(prefix.size()));
    } catch (const std::exception&) {
      throw CertificateError("bad unlink target '" + s + "'");
    }
    if (n < 1) throw CertificateError("unlink target needs at least one component");
    return LinkTarget::unlink(n);
  }
  if (j.is_object()) return LinkTarget::of(from_pd(pd_from_json(j)));
  throw CertificateError("target must be \"unlink:<n>\" or a PD object");
}

}  // namespace

Certificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("pd") || !j.contains("collection") || !j.contains("target")) {
    throw CertificateError("certificate needs \"pd\", \"collection\" and \"target\"");
  }
  Certificate c;
  try {
    c.base = from_pd(pd_from_json(j.at("pd")));
    c.target = target_from_json(j.at("target"));
    for (const auto& set : j.at("collection")) {
      std::vector<int> ids;
      for (const auto& id : set) ids.push_back(id.get<int>() - 1);
      c.collection.push_back(std::move(ids));
    }
  } catch (const nlohmann::json::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
  validate(c);
  return c;
}

Certificate parse_certificate(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CertificateError(std::string("certificate is not valid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  j["pd"] = pd_to_json(pd_code(c.base));
  j["collection"] = nlohmann::json::array();
  for (const auto& set : c.collection) {
    nlohmann::json ids = nlohmann::json::array();
    for (int x : set) ids.push_back(x + 1);
    j["collection"].push_back(ids);
  }
  if (c.target.unlink_components) {
    j["target"] = c.target.describe();
  } else {
    j["target"] = pd_to_json(pd_code(c.target.diagram));
  }
  return j;
}

LinkDiagram switched(const Certificate& c, unsigned long selection) {
  std::vector<int> flips;
  for (std::size_t t = 0; t < c.collection.size(); ++t) {
    if (selection & (1UL << t)) flips.insert(flips.end(), c.collection[t].begin(), c.collection[t].end());
  }
  return switch_crossings(c.base, flips);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "verified";
    case Verdict::Refuted:
      return "refuted";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

constexpr int kCompareConwayDegree = 8;

std::string sequence_text(const std::vector<int>& s) {
  std::string out;
  for (int i : s) out += std::to_string(i);
  return out;
}

// Invariants of the target, computed once per certificate.
struct TargetData {
  const LinkTarget* target;
  LinkingMatrix linking;
  std::optional<ConwayPolynomial> conway;
  std::optional<MilnorInvariants> milnor;
  std::string simplified_key;
};

std::optional<ConwayPolynomial> try_conway(const LinkDiagram& d, const ConwayOptions& options) {
  try {
    return conway_truncated(d, kCompareConwayDegree, options);
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

TargetData target_data(const LinkTarget& t, const VerifyOptions& options) {
  TargetData data{&t, linking_matrix(t.diagram), std::nullopt, std::nullopt, {}};
  if (t.unlink_components) {
    ConwayPolynomial c;
    if (*t.unlink_components == 1) c.coefficients = {Integer(1)};
    data.conway = c;
    return data;
  }
  data.conway = try_conway(t.diagram, options.conway);
  data.milnor.emplace(t.diagram, options.mu_cap);
  data.simplified_key = canonical_key(simplify(t.diagram, options.simplify_budget));
  return data;
}

// A differing invariant, described, or empty if none was found.
std::string differing_invariant(const LinkDiagram& d, const TargetData& t, const VerifyOptions& options) {
  if (d.num_components() != t.target->components()) return "component count";
  LinkingMatrix lk = linking_matrix(d);
  if (lk != t.linking) return "linking matrix";
  auto c = try_conway(d, options.conway);
  if (c && t.conway && !(*c == *t.conway)) {
    return "Conway " + to_string(*c) + " vs " + to_string(*t.conway);
  }
  MilnorInvariants mine(d, options.mu_cap);
  if (!t.milnor) {
    if (auto nz = mine.first_nonzero()) {
      return "mu-bar(" + sequence_text(nz->sequence) + ") = " + nz->value.str();
    }
    return {};
  }
  // Lengths in increasing order; once an indeterminacy differs, later
  // values are no longer comparable.
  for (int len = 2; len <= mine.max_length(); ++len) {
    auto a = mine.all_of_length(len);
    auto b = t.milnor->all_of_length(len);
    bool comparable = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].delta != b[i].delta) {
        comparable = false;
        continue;
      }
      if (a[i].value != b[i].value) return "mu-bar(" + sequence_text(a[i].sequence) + ")";
    }
    if (!comparable) break;
  }
  return {};
}

SelectionResult compare(const LinkDiagram& d, const TargetData& t, const VerifyOptions& options) {
  SelectionResult r;
  std::string diff = differing_invariant(d, t, options);
  LinkDiagram s = simplify(d, options.simplify_budget);
  r.crossings_after_simplify = s.num_crossings();
  if (!diff.empty()) {
    r.verdict = Verdict::Refuted;
    r.reason = diff + " differs";
    return r;
  }
  bool reached = t.target->unlink_components ? s.num_crossings() == 0 : canonical_key(s) == t.simplified_key;
  if (reached) {
    r.verdict = Verdict::Verified;
    r.reason = "simplifies to the target";
  } else {
    r.verdict = Verdict::Inconclusive;
    r.reason = "invariants agree, simplification stopped at " + std::to_string(s.num_crossings()) + " crossings";
  }
  return r;
}

}  // namespace

SelectionResult compare_with_target(const LinkDiagram& d, const LinkTarget& target, const VerifyOptions& options) {
  TargetData t = target_data(target, options);
  return compare(d, t, options);
}

VerifyReport verify_certificate(const Certificate& c, const VerifyOptions& options) {
  validate(c);
  TargetData t = target_data(c.target, options);
  VerifyReport report;
  const unsigned long count = 1UL << c.collection.size();
  bool all_verified = true, any_refuted = false;
  for (unsigned long sel = 1; sel < count; ++sel) {
    SelectionResult r = compare(switched(c, sel), t, options);
    r.selection = sel;
    all_verified = all_verified && r.verdict == Verdict::Verified;
    any_refuted = any_refuted || r.verdict == Verdict::Refuted;
    report.selections.push_back(std::move(r));
  }
  report.verdict = any_refuted ? Verdict::Refuted : all_verified ? Verdict::Verified : Verdict::Inconclusive;
  return report;
}

ProfileComparison m_equivalence_implies_profile(const Certificate& c, int m, const ConwayOptions& options) {
  validate(c);
  ProfileComparison out;
  out.base = finite_type_profile(c.base, m, options);
  out.target = c.target.unlink_components ? unlink_profile(*c.target.unlink_components, m)
                                          : finite_type_profile(c.target.diagram, m, options);
  out.agree = same_profile(out.base, out.target);
  return out;
}

BrunnianReport is_brunnian(const LinkDiagram& d, const BrunnianOptions& options) {
  const int n = d.num_components();
  if (n < 2) throw std::invalid_argument("a Brunnian check needs at least two components");
  if (n > 20) throw std::invalid_argument("too many components");
  VerifyOptions verify{options.mu_cap, options.simplify_budget, options.conway};
  BrunnianReport report;
  report.brunnian = true;
  // masks of the components to keep
  std::vector<unsigned long> keeps;
  const unsigned long full = (1UL << n) - 1;
  if (options.weak) {
    for (int i = 0; i < n; ++i) keeps.push_back(full & ~(1UL << i));
  } else {
    for (unsigned long keep = 1; keep < full; ++keep) keeps.push_back(keep);
  }
  for (unsigned long keep : keeps) {
    std::vector<int> removed, kept;
    for (int i = 0; i < n; ++i) (keep & (1UL << i) ? kept : removed).push_back(i);
    LinkDiagram sub = delete_components(d, removed);
    SelectionResult r = compare_with_target(sub, LinkTarget::unlink(sub.num_components()), verify);
    bool profile_ok = finite_type_profile(sub, options.profile_order, options.conway).matches_unlink;
    if (r.verdict == Verdict::Verified && profile_ok) continue;
    report.brunnian = false;
    for (int& i : kept) ++i;
    report.witness = kept;
    report.inconclusive = r.verdict == Verdict::Inconclusive && profile_ok;
    if (!report.inconclusive) return report;
  }
  return report;
}

Theorem1Report theorem1_check(const LinkDiagram& d, int m, const Theorem1Options& options) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  Theorem1Report r;
  r.m = m;
  r.components = d.num_components();
  // mu-bar of length k sits in degree k-1, so length m+2 needs cap m+1
  MilnorInvariants mu(d, m + 1);
  r.vanishing_length = mu.vanishing_length();
  r.mu_vanish_m1 = mu.vanish_through(m + 1);
  r.mu_vanish_m2 = mu.vanish_through(m + 2);
  r.first_nonzero = mu.first_nonzero();
  r.profile = finite_type_profile(d, m, options.conway);
  r.next_profile = finite_type_profile(d, m + 1, options.conway);
  r.sufficiency_consistent = !r.mu_vanish_m2 || r.profile.matches_unlink;
  r.necessity_consistent = !r.profile.matches_unlink || r.mu_vanish_m1;
  return r;
}

std::string to_string(TrivialityStatus s) {
  switch (s) {
    case TrivialityStatus::TrivialCertified:
      return "trivial (certified)";
    case TrivialityStatus::Nontrivial:
      return "nontrivial";
    case TrivialityStatus::Undetermined:
      return "undetermined at cap";
  }
  return "?";
}

TrivialityReport corollary32_scan(const LinkDiagram& d, int cap, std::size_t simplify_budget) {
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  TrivialityReport r;
  r.cap = cap;
  MilnorInvariants mu(d, cap);
  r.first_nonzero = mu.first_nonzero();
  LinkDiagram s = simplify(d, simplify_budget);
  r.crossings_after_simplify = s.num_crossings();
  if (r.first_nonzero) {
    r.status = TrivialityStatus::Nontrivial;
  } else if (s.num_crossings() == 0) {
    r.status = TrivialityStatus::TrivialCertified;
  } else {
    r.status = TrivialityStatus::Undetermined;
  }
  return r;
}

}  // namespace platlab
