#include "platlab/linkgroup.hpp"

#include <sstream>

namespace platlab {

Presentation wirtinger(const LinkDiagram& d) {
  Presentation p;
  std::vector<int> first_gen(d.num_components());
  for (int c = 0; c < d.num_components(); ++c) {
    const auto& comp = d.component(c);
    int unders = 0;
    for (const auto& v : comp) unders += v.over ? 0 : 1;
    int arcs = std::max(1, unders);
    first_gen[c] = static_cast<int>(p.generators.size());
    for (int a = 0; a < arcs; ++a) p.generators.push_back({c, a});
    p.meridians.push_back(first_gen[c]);
    std::vector<int> arc_of_visit;
    int seen = 0;
    for (const auto& v : comp) {
      arc_of_visit.push_back(first_gen[c] + seen % arcs);
      if (!v.over) ++seen;
    }
    p.arc_of_visit.push_back(std::move(arc_of_visit));
  }
  const int rank = static_cast<int>(p.generators.size());
  for (int x = 0; x < d.num_crossings(); ++x) {
    auto u = d.under_location(x);
    auto o = d.over_location(x);
    const auto& comp = d.component(u.component);
    int in = p.arc_of_visit[u.component][u.position];
    int out = p.arc_of_visit[u.component][(u.position + 1) % comp.size()];
    int over = p.arc_of_visit[o.component][o.position];
    int s = d.sign(x);
    p.crossings.push_back({in, out, over, s});
    auto gen = [&](int g, int e) { return FreeWord::generator(rank, g + 1, e); };
    FreeWord r = multiply(multiply(gen(out, 1), gen(over, -s)), multiply(gen(in, -1), gen(over, s)));
    p.relators.push_back(r);
  }
  return p;
}

std::string to_string(const Presentation& p) {
  std::ostringstream out;
  auto name = [](const FreeWord& w) {
    // print Wirtinger words with a<k> instead of x<k>
    std::string s = to_string(w);
    for (auto& ch : s) {
      if (ch == 'x') ch = 'a';
    }
    return s;
  };
  out << "gens:";
  for (std::size_t g = 0; g < p.generators.size(); ++g) out << " a" << g + 1;
  out << " ; rels:";
  for (std::size_t r = 0; r < p.relators.size(); ++r) out << (r ? ", " : " ") << name(p.relators[r]);
  out << " ; meridians:";
  for (int m : p.meridians) out << " a" << m + 1;
  return out.str();
}

Longitude longitude(const LinkDiagram& d, int component, const Presentation& p) {
  if (component < 0 || component >= d.num_components()) throw DiagramError("bad component index");
  const int rank = static_cast<int>(p.generators.size());
  std::vector<Letter> letters;
  for (const auto& v : d.component(component)) {
    if (v.over) continue;
    int over = p.crossings[v.crossing].over;
    letters.push_back(d.sign(v.crossing) > 0 ? over + 1 : -(over + 1));
  }
  int w = self_writhe(d, component);
  for (int i = 0; i < std::abs(w); ++i) {
    int m = p.meridians[component] + 1;
    letters.push_back(w > 0 ? -m : m);
  }
  return {component, reduce(FreeWord(rank, std::move(letters))), -w};
}

namespace {

// conj * (1+X_c)^e * conj^-1
MagnusSeries conjugate_meridian(const MagnusSeries& conj, const MagnusSeries& conj_inv, int c, int e) {
  MagnusSeries s = conj;
  for (int i = 0; i < std::abs(e); ++i) s.multiply_generator(c, e > 0 ? 1 : -1);
  return s * conj_inv;
}

}  // namespace

std::vector<MagnusSeries> longitude_series(const LinkDiagram& d, int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  const int n = d.num_components();
  Presentation p = wirtinger(d);
  const int arcs = static_cast<int>(p.generators.size());
  // Every arc generator is conj[g] x_{c(g)} conj[g]^-1.
  std::vector<MagnusSeries> conj(arcs, MagnusSeries::one(n, cap));
  std::vector<MagnusSeries> conj_inv = conj;

  // the undercrossings that define arcs 1..r-1 of each component, in order
  std::vector<int> order;
  for (int c = 0; c < n; ++c) {
    for (const auto& v : d.component(c)) {
      if (!v.over && p.crossings[v.crossing].outgoing != p.meridians[c]) order.push_back(v.crossing);
    }
  }
  // Each round makes the conjugators exact one degree further.
  for (int round = 0; round <= cap; ++round) {
    bool changed = false;
    for (int x : order) {
      const auto& wc = p.crossings[x];
      int oc = p.generators[wc.over].component + 1;
      MagnusSeries next = conjugate_meridian(conj[wc.over], conj_inv[wc.over], oc, -wc.sign) * conj[wc.incoming];
      if (!(next == conj[wc.outgoing])) {
        changed = true;
        conj_inv[wc.outgoing] = next.inverse();
        conj[wc.outgoing] = std::move(next);
      }
    }
    if (!changed) break;
  }

  std::vector<MagnusSeries> out;
  for (int c = 0; c < n; ++c) {
    MagnusSeries l = MagnusSeries::one(n, cap);
    for (const auto& v : d.component(c)) {
      if (v.over) continue;
      const auto& wc = p.crossings[v.crossing];
      int oc = p.generators[wc.over].component + 1;
      l = l * conjugate_meridian(conj[wc.over], conj_inv[wc.over], oc, wc.sign);
    }
    int w = self_writhe(d, c);
    for (int i = 0; i < std::abs(w); ++i) l.multiply_generator(c + 1, w > 0 ? -1 : 1);
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<FreeWord> chen_milnor_words(const LinkDiagram& d, int cap) {
  std::vector<FreeWord> out;
  for (const auto& s : longitude_series(d, cap)) out.push_back(collected_word(collect(s), s.rank()));
  return out;
}

}  // namespace platlab
