#pragma once

// Certificates of m-equivalence (crossing-switch collections), unlink
// recognition by simplification plus invariants, Brunnian checks, and the
// mu-bar / finite type consistency reports for plat closures.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "platlab/diagram.hpp"
#include "platlab/invariants.hpp"

namespace platlab {

inline constexpr int kDefaultMuCap = 6;

class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LinkTarget {
  // Either the n-component unlink or an explicit diagram.
  std::optional<int> unlink_components;
  LinkDiagram diagram;

  static LinkTarget unlink(int n) { return {n, LinkDiagram::unlink(n)}; }
  static LinkTarget of(LinkDiagram d) { return {std::nullopt, std::move(d)}; }
  int components() const { return unlink_components ? *unlink_components : diagram.num_components(); }
  std::string describe() const;
};

struct Certificate {
  LinkDiagram base;
  std::vector<std::vector<int>> collection;  // 0-based crossing ids
  LinkTarget target;

  int m() const { return static_cast<int>(collection.size()) - 1; }
};

// Throws CertificateError unless the sets are non-empty, pairwise disjoint,
// in range, and the component counts agree.
void validate(const Certificate& c);

// {"pd": {...}, "collection": [[1, 2], [5]], "target": "unlink:2"}; the
// target may also be a PD object. Crossing ids are 1-based in the file.
Certificate certificate_from_json(const nlohmann::json& j);
Certificate parse_certificate(std::string_view text);
nlohmann::json certificate_to_json(const Certificate& c);

// The diagram with every crossing of the selected sets switched. Bit t of
// `selection` picks collection[t].
LinkDiagram switched(const Certificate& c, unsigned long selection);

enum class Verdict { Verified, Refuted, Inconclusive };
std::string to_string(Verdict v);

struct VerifyOptions {
  int mu_cap = kDefaultMuCap;
  std::size_t simplify_budget = kDefaultSimplifyBudget;
  ConwayOptions conway;
};

struct SelectionResult {
  unsigned long selection = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  int crossings_after_simplify = 0;
};

struct VerifyReport {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<SelectionResult> selections;  // binary counter order
};

// A selection is refuted by a differing invariant and verified when its
// simplified diagram is the simplified target. The certificate is verified
// only if every selection is.
VerifyReport verify_certificate(const Certificate& c, const VerifyOptions& options = {});

// Compares one diagram with the target: Refuted on a differing invariant,
// Verified when simplification reaches the target, Inconclusive otherwise.
SelectionResult compare_with_target(const LinkDiagram& d, const LinkTarget& target, const VerifyOptions& options);

struct ProfileComparison {
  FiniteTypeProfile base;
  FiniteTypeProfile target;
  bool agree = false;
};

// Profiles through order m of the base and the target. For a verified
// m-certificate these must agree; a disagreement is a soundness alarm.
ProfileComparison m_equivalence_implies_profile(const Certificate& c, int m, const ConwayOptions& options = {});

struct BrunnianOptions {
  bool weak = false;  // only the n sublinks with one component deleted
  int mu_cap = kDefaultMuCap;
  int profile_order = 3;
  std::size_t simplify_budget = kDefaultSimplifyBudget;
  ConwayOptions conway;
};

struct BrunnianReport {
  bool brunnian = false;
  bool inconclusive = false;
  std::vector<int> witness;  // components of a sublink that is not shown trivial
};

BrunnianReport is_brunnian(const LinkDiagram& d, const BrunnianOptions& options = {});

struct Theorem1Options {
  ConwayOptions conway;
};

struct Theorem1Report {
  int m = 0;
  int components = 0;
  int vanishing_length = 0;  // capped at m + 2
  bool mu_vanish_m1 = false;  // every mu-bar of length <= m+1 is zero
  bool mu_vanish_m2 = false;  // every mu-bar of length <= m+2 is zero
  std::optional<MilnorValue> first_nonzero;
  FiniteTypeProfile profile;       // through order m
  FiniteTypeProfile next_profile;  // through order m+1
  bool sufficiency_consistent = true;  // mu through m+2 vanish => profile through m is the unlink's
  bool necessity_consistent = true;    // profile through m is the unlink's => mu through m+1 vanish
  bool consistent() const { return sufficiency_consistent && necessity_consistent; }
};

Theorem1Report theorem1_check(const LinkDiagram& d, int m, const Theorem1Options& options = {});

enum class TrivialityStatus { TrivialCertified, Nontrivial, Undetermined };
std::string to_string(TrivialityStatus s);

struct TrivialityReport {
  TrivialityStatus status = TrivialityStatus::Undetermined;
  int cap = 0;
  std::optional<MilnorValue> first_nonzero;
  int crossings_after_simplify = 0;
};

// All mu-bar through length cap+1 vanish and simplification reaches the
// unlink: certified trivial. Some mu-bar is nonzero: nontrivial. Otherwise
// undetermined at this cap.
TrivialityReport corollary32_scan(const LinkDiagram& d, int cap = kDefaultMuCap,
                                  std::size_t simplify_budget = kDefaultSimplifyBudget);

}  // namespace platlab
