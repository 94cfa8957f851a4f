#pragma once

// Oriented link diagrams stored as signed Gauss codes: each component is the
// cyclic list of crossings it passes (over or under), plus one sign per
// crossing. PD codes are derived from this, since the sign fixes the
// rotation at a crossing.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace platlab {

inline constexpr std::size_t kDefaultSimplifyBudget = 10000;

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Visit {
  int crossing;
  bool over;
  friend bool operator==(const Visit&, const Visit&) = default;
  friend auto operator<=>(const Visit&, const Visit&) = default;
};

class LinkDiagram {
 public:
  LinkDiagram() = default;
  // Crossings are 0-based ids 0..signs.size()-1; each must be visited exactly
  // once over and once under. `kinks` defaults to zeros.
  LinkDiagram(std::vector<std::vector<Visit>> components, std::vector<int> signs,
              std::vector<int> kinks = {});

  static LinkDiagram unlink(int n);

  int num_components() const { return static_cast<int>(components_.size()); }
  int num_crossings() const { return static_cast<int>(signs_.size()); }
  const std::vector<std::vector<Visit>>& components() const { return components_; }
  const std::vector<Visit>& component(int i) const { return components_.at(i); }
  int sign(int crossing) const { return signs_.at(crossing); }
  const std::vector<int>& signs() const { return signs_; }
  // Kinks added by zero_frame, per component.
  const std::vector<int>& framing_kinks() const { return kinks_; }

  struct Location {
    int component;
    int position;
  };
  Location over_location(int crossing) const { return over_.at(crossing); }
  Location under_location(int crossing) const { return under_.at(crossing); }
  int over_component(int crossing) const { return over_.at(crossing).component; }
  int under_component(int crossing) const { return under_.at(crossing).component; }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.components_ == b.components_ && a.signs_ == b.signs_ && a.kinks_ == b.kinks_;
  }

 private:
  std::vector<std::vector<Visit>> components_;
  std::vector<int> signs_;
  std::vector<int> kinks_;
  std::vector<Location> over_;
  std::vector<Location> under_;
};

// Flip over/under (and the sign) at each listed crossing.
LinkDiagram switch_crossings(const LinkDiagram& d, std::span<const int> crossings);

// Oriented smoothing at one crossing. Joining two components keeps the
// lower index; splitting one inserts the second piece right after it.
LinkDiagram smooth(const LinkDiagram& d, int crossing);

int self_writhe(const LinkDiagram& d, int component);
// Adds |w| kinks of sign -sgn(w) at the start of every component with
// self-writhe w, so all self-writhes become 0.
LinkDiagram zero_frame(const LinkDiagram& d);

// Removes the listed components and every crossing they take part in.
LinkDiagram delete_components(const LinkDiagram& d, std::span<const int> components);

// Drops the listed crossings (both visits) and renumbers the rest in order.
LinkDiagram remove_crossings(const LinkDiagram& d, std::span<const int> crossings);

// Renumbers crossings in order of first appearance along the components.
LinkDiagram canonical(const LinkDiagram& d);
std::string canonical_key(const LinkDiagram& d);

// True when the crossing graph on components is disconnected (n >= 2).
bool is_split_diagram(const LinkDiagram& d);

// Faces of the projection, each as the cyclic list of edge ids on its boundary.
std::vector<std::vector<int>> faces(const LinkDiagram& d);
// Euler characteristic check of the rotation system.
bool is_planar(const LinkDiagram& d);

struct SimplifyStats {
  std::size_t r1 = 0, r2 = 0, r3 = 0;
};

// Greedy Reidemeister I/II reductions; a III move is kept only when it makes
// a I or II move available. Stops after `budget` moves.
LinkDiagram simplify(const LinkDiagram& d, std::size_t budget = kDefaultSimplifyBudget,
                     SimplifyStats* stats = nullptr);

// PD code: crossing [a,b,c,d] lists edge ids counterclockwise starting at the
// incoming under edge. Edges are numbered along the components in
// orientation order; edge j of a component ends at its visit j. Ids here are
// 0-based; the JSON form is 1-based.
struct PdCode {
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> signs;
  std::vector<std::vector<int>> components;
  std::vector<int> kinks;
};

PdCode pd_code(const LinkDiagram& d);
LinkDiagram from_pd(const PdCode& pd);
nlohmann::json pd_to_json(const PdCode& pd);
PdCode pd_from_json(const nlohmann::json& j);
std::string to_pd_json(const LinkDiagram& d);
LinkDiagram parse_pd_json(std::string_view text);

// Signed Gauss code, e.g. the Hopf link "O1 U2 | U1 O2 ; + +". Components are
// separated by '|', crossings are 1-based, signs follow ';'. An empty
// component is a crossingless circle.
std::string gauss_code(const LinkDiagram& d);
LinkDiagram parse_gauss(std::string_view text);

}  // namespace platlab
