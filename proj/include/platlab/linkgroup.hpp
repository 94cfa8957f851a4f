#pragma once

// Wirtinger presentations, zero-framed longitudes and the longitude words
// W_i in the meridians, computed modulo a lower-central-series cap.

#include <string>
#include <vector>

#include "platlab/diagram.hpp"
#include "platlab/freegroup.hpp"

namespace platlab {

struct Arc {
  int component;
  int index;  // arc 0 contains the edge ending at the component's first visit
};

struct WirtingerCrossing {
  int incoming;  // under strand, generator indices (0-based)
  int outgoing;
  int over;
  int sign;
};

struct Presentation {
  std::vector<Arc> generators;
  std::vector<FreeWord> relators;  // one per crossing, rank = generators.size()
  std::vector<int> meridians;      // generator of arc 0 of each component
  std::vector<WirtingerCrossing> crossings;
  // arc_of_visit[c][p] = generator of the arc ending at visit p of component c
  std::vector<std::vector<int>> arc_of_visit;
};

// One generator per arc. The relator at a crossing reads
// x_out x_over^-s x_in^-1 x_over^s, i.e. x_out = x_over^-s x_in x_over^s.
Presentation wirtinger(const LinkDiagram& d);
// "gens: a1 a2 ... ; rels: ... ; meridians: a1 a4" with a<k> the k-th generator.
std::string to_string(const Presentation& p);

struct Longitude {
  int component;
  FreeWord word;            // in the Wirtinger generators
  int framing_correction;   // meridian exponent appended, minus the self-writhe
};

// Product over the undercrossings of the component, in order from its first
// visit, of (over arc)^sign, followed by meridian^(-self_writhe).
Longitude longitude(const LinkDiagram& d, int component, const Presentation& p);

// Magnus expansions M(W_1)..M(W_n) in X_1..X_n (X_i for the meridian of
// component i), exact through degree `cap`.
std::vector<MagnusSeries> longitude_series(const LinkDiagram& d, int cap);

// W_1..W_n as words in the meridians, correct modulo F^(cap+1).
std::vector<FreeWord> chen_milnor_words(const LinkDiagram& d, int cap);

}  // namespace platlab
