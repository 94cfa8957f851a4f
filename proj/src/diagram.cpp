#include "platlab/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace platlab {

LinkDiagram::LinkDiagram(std::vector<std::vector<Visit>> components, std::vector<int> signs,
                         std::vector<int> kinks)
    : components_(std::move(components)), signs_(std::move(signs)), kinks_(std::move(kinks)) {
  if (kinks_.empty()) kinks_.assign(components_.size(), 0);
  if (kinks_.size() != components_.size()) throw DiagramError("kink counts do not match components");
  const int n = num_crossings();
  for (int s : signs_) {
    if (s != 1 && s != -1) throw DiagramError("crossing sign must be +1 or -1");
  }
  over_.assign(n, {-1, -1});
  under_.assign(n, {-1, -1});
  for (int c = 0; c < num_components(); ++c) {
    for (int p = 0; p < static_cast<int>(components_[c].size()); ++p) {
      const Visit& v = components_[c][p];
      if (v.crossing < 0 || v.crossing >= n) {
        throw DiagramError("visit to unknown crossing " + std::to_string(v.crossing));
      }
      auto& slot = v.over ? over_[v.crossing] : under_[v.crossing];
      if (slot.component >= 0) {
        throw DiagramError("crossing " + std::to_string(v.crossing) + " visited twice on the same level");
      }
      slot = {c, p};
    }
  }
  for (int x = 0; x < n; ++x) {
    if (over_[x].component < 0 || under_[x].component < 0) {
      throw DiagramError("crossing " + std::to_string(x) + " is missing a strand");
    }
  }
}

LinkDiagram LinkDiagram::unlink(int n) { return LinkDiagram(std::vector<std::vector<Visit>>(n), {}); }

LinkDiagram switch_crossings(const LinkDiagram& d, std::span<const int> crossings) {
  std::vector<char> flip(d.num_crossings(), 0);
  for (int x : crossings) {
    if (x < 0 || x >= d.num_crossings()) throw DiagramError("unknown crossing " + std::to_string(x));
    flip[x] ^= 1;
  }
  auto comps = d.components();
  for (auto& comp : comps) {
    for (auto& v : comp) {
      if (flip[v.crossing]) v.over = !v.over;
    }
  }
  auto signs = d.signs();
  for (int x = 0; x < d.num_crossings(); ++x) {
    if (flip[x]) signs[x] = -signs[x];
  }
  return LinkDiagram(std::move(comps), std::move(signs), d.framing_kinks());
}

LinkDiagram remove_crossings(const LinkDiagram& d, std::span<const int> crossings) {
  std::vector<char> gone(d.num_crossings(), 0);
  for (int x : crossings) gone.at(x) = 1;
  std::vector<int> relabel(d.num_crossings(), -1);
  std::vector<int> signs;
  for (int x = 0; x < d.num_crossings(); ++x) {
    if (!gone[x]) {
      relabel[x] = static_cast<int>(signs.size());
      signs.push_back(d.sign(x));
    }
  }
  std::vector<std::vector<Visit>> comps;
  for (const auto& comp : d.components()) {
    std::vector<Visit> out;
    for (const auto& v : comp) {
      if (!gone[v.crossing]) out.push_back({relabel[v.crossing], v.over});
    }
    comps.push_back(std::move(out));
  }
  return LinkDiagram(std::move(comps), std::move(signs), d.framing_kinks());
}

namespace {

// comp rotated to start just after position p (the visit at p is dropped).
std::vector<Visit> after(const std::vector<Visit>& comp, int p) {
  std::vector<Visit> out;
  const int k = static_cast<int>(comp.size());
  for (int i = 1; i < k; ++i) out.push_back(comp[(p + i) % k]);
  return out;
}

}  // namespace

LinkDiagram smooth(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.num_crossings()) {
    throw DiagramError("unknown crossing " + std::to_string(crossing));
  }
  auto o = d.over_location(crossing);
  auto u = d.under_location(crossing);
  auto comps = d.components();
  auto kinks = d.framing_kinks();
  if (o.component != u.component) {
    // Follow A up to the crossing, then B all the way round, then back to A.
    auto a = after(comps[o.component], o.position);
    auto b = after(comps[u.component], u.position);
    std::vector<Visit> merged = a;
    merged.insert(merged.end(), b.begin(), b.end());
    int keep = std::min(o.component, u.component);
    int drop = std::max(o.component, u.component);
    comps[keep] = std::move(merged);
    kinks[keep] += kinks[drop];
    comps.erase(comps.begin() + drop);
    kinks.erase(kinks.begin() + drop);
  } else {
    const auto& comp = comps[o.component];
    const int k = static_cast<int>(comp.size());
    int first = std::min(o.position, u.position);
    int second = std::max(o.position, u.position);
    std::vector<Visit> inner(comp.begin() + first + 1, comp.begin() + second);
    std::vector<Visit> outer;
    for (int i = second + 1; i < k + first; ++i) outer.push_back(comp[i % k]);
    int c = o.component;
    comps[c] = std::move(inner);
    comps.insert(comps.begin() + c + 1, std::move(outer));
    kinks.insert(kinks.begin() + c + 1, 0);
  }
  // Renumber around the removed crossing.
  auto signs = d.signs();
  signs.erase(signs.begin() + crossing);
  for (auto& comp : comps) {
    for (auto& v : comp) {
      if (v.crossing > crossing) --v.crossing;
    }
  }
  return LinkDiagram(std::move(comps), std::move(signs), std::move(kinks));
}

int self_writhe(const LinkDiagram& d, int component) {
  if (component < 0 || component >= d.num_components()) throw DiagramError("bad component index");
  int w = 0;
  for (const auto& v : d.component(component)) {
    if (v.over && d.under_component(v.crossing) == component) w += d.sign(v.crossing);
  }
  return w;
}

LinkDiagram zero_frame(const LinkDiagram& d) {
  auto comps = d.components();
  auto signs = d.signs();
  auto kinks = d.framing_kinks();
  for (int c = 0; c < d.num_components(); ++c) {
    int w = self_writhe(d, c);
    int s = w > 0 ? -1 : 1;
    std::vector<Visit> prefix;
    for (int i = 0; i < std::abs(w); ++i) {
      int x = static_cast<int>(signs.size());
      signs.push_back(s);
      prefix.push_back({x, true});
      prefix.push_back({x, false});
    }
    comps[c].insert(comps[c].begin(), prefix.begin(), prefix.end());
    kinks[c] += std::abs(w);
  }
  return LinkDiagram(std::move(comps), std::move(signs), std::move(kinks));
}

LinkDiagram delete_components(const LinkDiagram& d, std::span<const int> components) {
  std::vector<char> gone(d.num_components(), 0);
  for (int c : components) {
    if (c < 0 || c >= d.num_components()) throw DiagramError("bad component index " + std::to_string(c));
    gone[c] = 1;
  }
  if (std::count(gone.begin(), gone.end(), 1) == d.num_components()) {
    throw DiagramError("cannot delete every component");
  }
  std::vector<int> dead;
  for (int x = 0; x < d.num_crossings(); ++x) {
    if (gone[d.over_component(x)] || gone[d.under_component(x)]) dead.push_back(x);
  }
  LinkDiagram pruned = remove_crossings(d, dead);
  std::vector<std::vector<Visit>> comps;
  std::vector<int> kinks;
  for (int c = 0; c < d.num_components(); ++c) {
    if (gone[c]) continue;
    comps.push_back(pruned.component(c));
    kinks.push_back(pruned.framing_kinks()[c]);
  }
  return LinkDiagram(std::move(comps), pruned.signs(), std::move(kinks));
}

LinkDiagram canonical(const LinkDiagram& d) {
  std::vector<int> relabel(d.num_crossings(), -1);
  int next = 0;
  for (const auto& comp : d.components()) {
    for (const auto& v : comp) {
      if (relabel[v.crossing] < 0) relabel[v.crossing] = next++;
    }
  }
  std::vector<int> signs(d.num_crossings());
  for (int x = 0; x < d.num_crossings(); ++x) signs[relabel[x]] = d.sign(x);
  auto comps = d.components();
  for (auto& comp : comps) {
    for (auto& v : comp) v.crossing = relabel[v.crossing];
  }
  return LinkDiagram(std::move(comps), std::move(signs), d.framing_kinks());
}

std::string canonical_key(const LinkDiagram& d) { return gauss_code(canonical(d)); }

bool is_split_diagram(const LinkDiagram& d) {
  const int n = d.num_components();
  if (n < 2) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int x = 0; x < d.num_crossings(); ++x) parent[find(d.over_component(x))] = find(d.under_component(x));
  for (int c = 1; c < n; ++c) {
    if (find(c) != find(0)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// PD codes and faces

namespace {

struct EdgeIndex {
  std::vector<int> offset;  // first edge id of each component
  int total = 0;
};

EdgeIndex edge_index(const LinkDiagram& d) {
  EdgeIndex idx;
  for (const auto& comp : d.components()) {
    idx.offset.push_back(idx.total);
    idx.total += std::max<int>(1, static_cast<int>(comp.size()));
  }
  return idx;
}

}  // namespace

PdCode pd_code(const LinkDiagram& d) {
  PdCode pd;
  EdgeIndex idx = edge_index(d);
  auto arriving = [&](LinkDiagram::Location l) { return idx.offset[l.component] + l.position; };
  auto leaving = [&](LinkDiagram::Location l) {
    int k = static_cast<int>(d.component(l.component).size());
    return idx.offset[l.component] + (l.position + 1) % k;
  };
  for (int x = 0; x < d.num_crossings(); ++x) {
    auto u = d.under_location(x);
    auto o = d.over_location(x);
    int a = arriving(u), c = leaving(u);
    int oin = arriving(o), oout = leaving(o);
    if (d.sign(x) > 0) {
      pd.crossings.push_back({a, oout, c, oin});
    } else {
      pd.crossings.push_back({a, oin, c, oout});
    }
  }
  pd.signs = d.signs();
  for (int c = 0; c < d.num_components(); ++c) {
    std::vector<int> edges;
    int k = std::max<int>(1, static_cast<int>(d.component(c).size()));
    for (int j = 0; j < k; ++j) edges.push_back(idx.offset[c] + j);
    pd.components.push_back(std::move(edges));
  }
  pd.kinks = d.framing_kinks();
  return pd;
}

LinkDiagram from_pd(const PdCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  if (static_cast<int>(pd.signs.size()) != n) throw DiagramError("PD code needs one sign per crossing");
  std::map<int, std::pair<int, int>> where;  // edge -> (component, index)
  for (int c = 0; c < static_cast<int>(pd.components.size()); ++c) {
    if (pd.components[c].empty()) throw DiagramError("PD component without edges");
    for (int j = 0; j < static_cast<int>(pd.components[c].size()); ++j) {
      if (!where.emplace(pd.components[c][j], std::make_pair(c, j)).second) {
        throw DiagramError("edge " + std::to_string(pd.components[c][j]) + " listed in two places");
      }
    }
  }
  auto next_edge = [&](int e) {
    auto it = where.find(e);
    if (it == where.end()) throw DiagramError("edge " + std::to_string(e) + " belongs to no component");
    const auto& comp = pd.components[it->second.first];
    return comp[(it->second.second + 1) % comp.size()];
  };
  // head[e] = (crossing, over) where edge e ends
  std::map<int, std::pair<int, bool>> head;
  std::map<int, int> uses;
  for (int x = 0; x < n; ++x) {
    const auto& q = pd.crossings[x];
    for (int e : q) ++uses[e];
    int s = pd.signs[x];
    if (s != 1 && s != -1) throw DiagramError("crossing sign must be +1 or -1");
    int over_in = s > 0 ? q[3] : q[1];
    int over_out = s > 0 ? q[1] : q[3];
    if (next_edge(q[0]) != q[2]) {
      throw DiagramError("crossing " + std::to_string(x) + ": under strand edges are not consecutive");
    }
    if (next_edge(over_in) != over_out) {
      throw DiagramError("crossing " + std::to_string(x) + ": over strand does not match the sign");
    }
    if (!head.emplace(q[0], std::make_pair(x, false)).second ||
        !head.emplace(over_in, std::make_pair(x, true)).second) {
      throw DiagramError("edge enters two crossings");
    }
  }
  for (const auto& [e, count] : uses) {
    if (count != 2) throw DiagramError("edge " + std::to_string(e) + " must appear exactly twice");
  }
  std::vector<std::vector<Visit>> comps;
  for (const auto& comp : pd.components) {
    std::vector<Visit> visits;
    for (int e : comp) {
      auto it = head.find(e);
      if (it == head.end()) {
        if (comp.size() != 1 || uses.count(e)) throw DiagramError("edge " + std::to_string(e) + " has no end");
        continue;
      }
      visits.push_back({it->second.first, it->second.second});
    }
    comps.push_back(std::move(visits));
  }
  std::vector<int> kinks = pd.kinks;
  if (!kinks.empty() && kinks.size() != comps.size()) throw DiagramError("kinks do not match components");
  LinkDiagram d(std::move(comps), pd.signs, std::move(kinks));
  if (!is_planar(d)) throw DiagramError("PD code is not planar");
  return d;
}

std::vector<std::vector<int>> faces(const LinkDiagram& d) {
  PdCode pd = pd_code(d);
  const int n = d.num_crossings();
  // ends[e] = the two (crossing, slot) darts of edge e
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < 4; ++s) ends[pd.crossings[x][s]].push_back({x, s});
  }
  auto other_end = [&](int x, int s) {
    const auto& pair = ends[pd.crossings[x][s]];
    return pair[0] == std::make_pair(x, s) ? pair[1] : pair[0];
  };
  std::vector<std::array<char, 4>> seen(n, {0, 0, 0, 0});
  std::vector<std::vector<int>> out;
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < 4; ++s) {
      if (seen[x][s]) continue;
      std::vector<int> face;
      int cx = x, cs = s;
      while (!seen[cx][cs]) {
        seen[cx][cs] = 1;
        face.push_back(pd.crossings[cx][cs]);
        auto [y, t] = other_end(cx, cs);
        cx = y;
        cs = (t + 3) % 4;
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

bool is_planar(const LinkDiagram& d) {
  const int n = d.num_crossings();
  if (n == 0) return true;
  // pieces of the 4-valent crossing graph
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  // crossings along one component lie in one piece
  for (const auto& comp : d.components()) {
    for (std::size_t i = 1; i < comp.size(); ++i) parent[find(comp[i].crossing)] = find(comp[0].crossing);
  }
  std::set<int> pieces;
  for (int x = 0; x < n; ++x) pieces.insert(find(x));
  auto f = faces(d);
  return static_cast<long>(f.size()) == static_cast<long>(n) + 2 * static_cast<long>(pieces.size());
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

struct EdgeInfo {
  int component;
  int position;  // the edge ends at this visit and starts at the previous one
};

EdgeInfo locate_edge(const EdgeIndex& idx, int e) {
  int c = static_cast<int>(std::upper_bound(idx.offset.begin(), idx.offset.end(), e) - idx.offset.begin()) - 1;
  return {c, e - idx.offset[c]};
}

std::pair<Visit, Visit> edge_ends(const LinkDiagram& d, const EdgeInfo& info) {
  const auto& comp = d.component(info.component);
  int k = static_cast<int>(comp.size());
  return {comp[(info.position + k - 1) % k], comp[info.position]};
}

bool find_r1(const LinkDiagram& d, LinkDiagram& out) {
  for (const auto& comp : d.components()) {
    const int k = static_cast<int>(comp.size());
    for (int i = 0; i < k; ++i) {
      if (comp[i].crossing == comp[(i + 1) % k].crossing) {
        std::vector<int> x{comp[i].crossing};
        out = remove_crossings(d, x);
        return true;
      }
    }
  }
  return false;
}

bool find_r2(const LinkDiagram& d, const std::vector<std::vector<int>>& fs, LinkDiagram& out) {
  EdgeIndex idx = edge_index(d);
  for (const auto& f : fs) {
    if (f.size() != 2) continue;
    auto [a0, a1] = edge_ends(d, locate_edge(idx, f[0]));
    if (a0.crossing == a1.crossing) continue;
    if (a0.over != a1.over) continue;
    std::vector<int> xs{a0.crossing, a1.crossing};
    out = remove_crossings(d, xs);
    return true;
  }
  return false;
}

bool has_r1_or_r2(const LinkDiagram& d) {
  LinkDiagram scratch;
  if (find_r1(d, scratch)) return true;
  return find_r2(d, faces(d), scratch);
}

bool find_r3(const LinkDiagram& d, const std::vector<std::vector<int>>& fs, LinkDiagram& out) {
  EdgeIndex idx = edge_index(d);
  for (const auto& f : fs) {
    if (f.size() != 3) continue;
    std::set<int> crossings;
    bool alternating = true;
    std::vector<EdgeInfo> edges;
    for (int e : f) {
      auto info = locate_edge(idx, e);
      auto [v0, v1] = edge_ends(d, info);
      crossings.insert(v0.crossing);
      crossings.insert(v1.crossing);
      if (v0.over == v1.over) alternating = false;
      edges.push_back(info);
    }
    if (crossings.size() != 3 || alternating) continue;
    auto comps = d.components();
    for (const auto& info : edges) {
      auto& comp = comps[info.component];
      int k = static_cast<int>(comp.size());
      std::swap(comp[(info.position + k - 1) % k], comp[info.position]);
    }
    LinkDiagram moved(std::move(comps), d.signs(), d.framing_kinks());
    if (has_r1_or_r2(moved)) {
      out = std::move(moved);
      return true;
    }
  }
  return false;
}

}  // namespace

LinkDiagram simplify(const LinkDiagram& d, std::size_t budget, SimplifyStats* stats) {
  SimplifyStats local;
  LinkDiagram cur = d;
  std::size_t moves = 0;
  while (moves < budget) {
    LinkDiagram next;
    if (find_r1(cur, next)) {
      ++local.r1;
    } else {
      auto fs = faces(cur);
      if (find_r2(cur, fs, next)) {
        ++local.r2;
      } else if (find_r3(cur, fs, next)) {
        ++local.r3;
      } else {
        break;
      }
    }
    cur = std::move(next);
    ++moves;
  }
  if (stats) *stats = local;
  return cur;
}

// ---------------------------------------------------------------------------
// Text formats

nlohmann::json pd_to_json(const PdCode& pd) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& q : pd.crossings) j["crossings"].push_back({q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1});
  j["signs"] = pd.signs;
  j["components"] = nlohmann::json::array();
  for (const auto& comp : pd.components) {
    std::vector<int> one_based;
    for (int e : comp) one_based.push_back(e + 1);
    j["components"].push_back(one_based);
  }
  if (std::any_of(pd.kinks.begin(), pd.kinks.end(), [](int k) { return k != 0; })) j["kinks"] = pd.kinks;
  return j;
}

PdCode pd_from_json(const nlohmann::json& j) {
  PdCode pd;
  try {
    for (const auto& q : j.at("crossings")) {
      if (q.size() != 4) throw DiagramError("PD crossing must have 4 edges");
      pd.crossings.push_back({q[0].get<int>() - 1, q[1].get<int>() - 1, q[2].get<int>() - 1, q[3].get<int>() - 1});
    }
    pd.signs = j.at("signs").get<std::vector<int>>();
    for (const auto& comp : j.at("components")) {
      std::vector<int> edges;
      for (const auto& e : comp) edges.push_back(e.get<int>() - 1);
      pd.components.push_back(std::move(edges));
    }
    if (j.contains("kinks")) pd.kinks = j.at("kinks").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw DiagramError(std::string("malformed PD JSON: ") + e.what());
  }
  return pd;
}

std::string to_pd_json(const LinkDiagram& d) { return pd_to_json(pd_code(d)).dump(); }

LinkDiagram parse_pd_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DiagramError(std::string("malformed PD JSON: ") + e.what());
  }
  return from_pd(pd_from_json(j));
}

std::string gauss_code(const LinkDiagram& d) {
  std::ostringstream out;
  for (int c = 0; c < d.num_components(); ++c) {
    if (c > 0) out << " |";
    for (std::size_t i = 0; i < d.component(c).size(); ++i) {
      const auto& v = d.component(c)[i];
      if (c > 0 || i > 0) out << ' ';
      out << (v.over ? 'O' : 'U') << v.crossing + 1;
    }
  }
  if (d.num_crossings() > 0) {
    out << " ;";
    for (int s : d.signs()) out << ' ' << (s > 0 ? '+' : '-');
  }
  return out.str();
}

LinkDiagram parse_gauss(std::string_view text) {
  std::string body(text), sign_part;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    sign_part = body.substr(semi + 1);
    body = body.substr(0, semi);
  }
  std::vector<std::vector<Visit>> comps(1);
  int max_crossing = 0;
  std::size_t i = 0;
  while (i < body.size()) {
    char ch = body[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '|') {
      comps.emplace_back();
      ++i;
    } else if (ch == 'O' || ch == 'U') {
      std::size_t j = i + 1;
      while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
      if (j == i + 1) throw DiagramError("expected crossing number at position " + std::to_string(i + 1));
      int x = std::stoi(body.substr(i + 1, j - i - 1));
      if (x < 1) throw DiagramError("crossing numbers start at 1");
      max_crossing = std::max(max_crossing, x);
      comps.back().push_back({x - 1, ch == 'O'});
      i = j;
    } else {
      throw DiagramError("unexpected character '" + std::string(1, ch) + "' at position " + std::to_string(i));
    }
  }
  std::vector<int> signs;
  for (char ch : sign_part) {
    if (ch == '+') signs.push_back(1);
    else if (ch == '-') signs.push_back(-1);
    else if (!std::isspace(static_cast<unsigned char>(ch))) throw DiagramError("bad sign character");
  }
  if (static_cast<int>(signs.size()) != max_crossing) throw DiagramError("need one sign per crossing");
  LinkDiagram d(std::move(comps), std::move(signs));
  if (!is_planar(d)) throw DiagramError("Gauss code is not planar");
  return d;
}

}  // namespace platlab
