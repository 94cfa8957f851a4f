// platlab: closures, invariants, presentations, certificates and the
// mu-bar / finite type reports from the command line.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "platlab/braid.hpp"
#include "platlab/diagram.hpp"
#include "platlab/equivalence.hpp"
#include "platlab/freegroup.hpp"
#include "platlab/invariants.hpp"
#include "platlab/linkgroup.hpp"

using namespace platlab;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitAlarm = 3;

struct Config {
  int magnus_cap = kDefaultMagnusCap;
  int conway_bound = kDefaultConwayBound;
  std::size_t simplify_budget = kDefaultSimplifyBudget;
  std::string output = "text";

  ConwayOptions conway() const {
    ConwayOptions o;
    o.crossing_bound = conway_bound;
    return o;
  }
};

// A soundness alarm is reported on stderr and turns the exit code nonzero.
struct Outcome {
  Json record;
  std::string raw;  // printed as is in text mode when set
  bool alarm = false;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// PD JSON, a JSON record with a "pd" field (as printed by `close --output
// json`), or a Gauss code.
LinkDiagram load_diagram(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw DiagramError(std::string("input is not valid JSON: ") + e.what());
    }
    if (j.contains("pd")) j = j["pd"];
    return from_pd(pd_from_json(j));
  }
  std::string line = text;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  return parse_gauss(line);
}

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

Json integers_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

std::string sequence_text(const std::vector<int>& s) {
  std::string out;
  for (int i : s) out += std::to_string(i);
  return out;
}

Json milnor_json(const MilnorValue& v) {
  return Json{{"sequence", sequence_text(v.sequence)}, {"value", integer_json(v.value)}, {"delta", integer_json(v.delta)}};
}

Json profile_json(const FiniteTypeProfile& p) {
  Json j{{"order", p.order}, {"components", p.components}};
  if (!p.linking.empty()) j["linking"] = p.linking;
  j["conway"] = integers_json(p.conway);
  j["matches_unlink"] = p.matches_unlink;
  return j;
}

// Braids name their strand count implicitly: the largest generator used,
// rounded up to an even count for plats.
BraidWord load_braid(const std::string& text, int strands, bool even) {
  if (strands > 0) return parse_braid(text, strands);
  BraidWord wide = parse_braid(text, 1000);
  int top = 1;
  for (const auto& l : wide.letters()) top = std::max(top, l.generator);
  int n = top + 1;
  if (even && n % 2) ++n;
  return BraidWord(n, wide.letters());
}

FreeWord load_word(const std::string& text, int rank) {
  if (rank > 0) return parse_word(text, rank);
  FreeWord wide = parse_word(text, 1000);
  int top = 1;
  for (Letter l : wide.letters()) top = std::max(top, generator_of(l));
  return FreeWord(top, std::vector<Letter>(wide.letters().begin(), wide.letters().end()));
}

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object()) {
      print_text(v, key, out);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      // one line per record
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << key << "[" << i + 1 << "]:";
        for (auto f = v[i].begin(); f != v[i].end(); ++f) {
          out << " " << f.key() << "=" << (f.value().is_string() ? f.value().get<std::string>() : f.value().dump());
        }
        out << "\n";
      }
    } else if (v.is_string()) {
      out << key << ": " << v.get<std::string>() << "\n";
    } else {
      out << key << ": " << v.dump() << "\n";
    }
  }
}

// ---------------------------------------------------------------------------

struct CloseArgs {
  std::string braid;
  bool trace = false;
  int strands = 0;
  std::string format = "pd";
};

Outcome cmd_close(const CloseArgs& a, const Config& cfg) {
  BraidWord b = load_braid(a.braid, a.strands, !a.trace);
  LinkDiagram d = a.trace ? ordinary_closure(b) : plat_closure(b);
  Outcome o;
  if (cfg.output == "text") {
    // bare diagram so it can be piped into the other commands
    o.raw = a.format == "gauss" ? gauss_code(d) : to_pd_json(d);
    return o;
  }
  o.record = Json{{"closure", a.trace ? "trace" : "plat"},
                  {"strands", b.strands()},
                  {"braid", to_string(b)},
                  {"components", d.num_components()},
                  {"crossings", d.num_crossings()},
                  {"pd", nlohmann::json::parse(to_pd_json(d))},
                  {"gauss", gauss_code(d)}};
  return o;
}

struct InvariantsArgs {
  std::string input = "-";
  int mu_len = 0;
  bool conway = false;
  int profile = -1;
};

Outcome cmd_invariants(const InvariantsArgs& a, const Config& cfg) {
  LinkDiagram d = load_diagram(read_input(a.input));
  Outcome o;
  Json& r = o.record;
  r["components"] = d.num_components();
  r["crossings"] = d.num_crossings();
  r["linking"] = linking_matrix(d);
  if (a.mu_len > 0) {
    if (a.mu_len < 2) throw std::invalid_argument("--mu-len must be at least 2");
    if (a.mu_len > cfg.magnus_cap + 1) {
      throw std::invalid_argument("--mu-len " + std::to_string(a.mu_len) + " exceeds the Magnus cap + 1");
    }
    MilnorInvariants mu(d, a.mu_len - 1);
    r["mu_vanishing_length"] = mu.vanishing_length();
    Json list = Json::array();
    for (int len = 2; len <= a.mu_len; ++len) {
      for (const auto& v : mu.all_of_length(len)) list.push_back(milnor_json(v));
    }
    r["mu"] = list;
  }
  if (a.conway) {
    ConwayPolynomial c = conway(d, cfg.conway());
    r["conway"] = to_string(c);
    r["conway_coefficients"] = integers_json(c.coefficients);
  }
  if (a.profile >= 0) r["profile"] = profile_json(finite_type_profile(d, a.profile, cfg.conway()));
  return o;
}

struct GroupArgs {
  std::string input = "-";
  bool longitudes = false;
  int cap = 0;
};

Outcome cmd_group(const GroupArgs& a, const Config& cfg) {
  LinkDiagram d = load_diagram(read_input(a.input));
  Presentation p = wirtinger(d);
  Outcome o;
  Json& r = o.record;
  r["generators"] = p.generators.size();
  Json rels = Json::array();
  // arcs are a<k>; x<i> is kept for the meridians in the longitude words
  for (const auto& rel : p.relators) {
    std::string text = to_string(rel);
    std::replace(text.begin(), text.end(), 'x', 'a');
    rels.push_back(text);
  }
  r["relators"] = rels;
  Json mer = Json::array();
  for (int m : p.meridians) mer.push_back("a" + std::to_string(m + 1));
  r["meridians"] = mer;
  if (a.longitudes) {
    const int cap = a.cap > 0 ? a.cap : cfg.magnus_cap;
    r["cap"] = cap;
    auto series = longitude_series(d, cap);
    Json ws = Json::array();
    for (std::size_t i = 0; i < series.size(); ++i) {
      Json collected = Json::array();
      for (const auto& f : collect(series[i])) {
        collected.push_back(to_string(f.tree) + (f.exponent == 1 ? "" : "^" + std::to_string(f.exponent)));
      }
      FreeWord w = collected_word(collect(series[i]), d.num_components());
      ws.push_back(Json{{"component", i + 1}, {"word", to_string(w)}, {"collected", collected}});
    }
    r["longitudes"] = ws;
  }
  return o;
}

struct VerifyArgs {
  std::string input = "-";
  int mu_cap = kDefaultMuCap;
};

std::string selection_text(const Certificate& c, unsigned long sel) {
  std::string out = "{";
  bool first = true;
  for (std::size_t t = 0; t < c.collection.size(); ++t) {
    if (!(sel & (1UL << t))) continue;
    if (!first) out += ",";
    out += "C" + std::to_string(t + 1);
    first = false;
  }
  return out + "}";
}

Outcome cmd_verify(const VerifyArgs& a, const Config& cfg) {
  Certificate c = parse_certificate(read_input(a.input));
  VerifyOptions opts;
  opts.mu_cap = a.mu_cap;
  opts.simplify_budget = cfg.simplify_budget;
  opts.conway = cfg.conway();
  VerifyReport rep = verify_certificate(c, opts);
  Outcome o;
  Json& r = o.record;
  r["m"] = c.m();
  r["target"] = c.target.describe();
  r["verdict"] = to_string(rep.verdict);
  Json sels = Json::array();
  for (const auto& s : rep.selections) {
    sels.push_back(Json{{"selection", selection_text(c, s.selection)},
                        {"verdict", to_string(s.verdict)},
                        {"crossings_after_simplify", s.crossings_after_simplify},
                        {"reason", s.reason}});
  }
  r["selections"] = sels;
  if (rep.verdict == Verdict::Verified) {
    ProfileComparison p = m_equivalence_implies_profile(c, c.m(), cfg.conway());
    r["profile_agrees"] = p.agree;
    o.alarm = !p.agree;
  }
  return o;
}

struct Theorem1Args {
  std::string braid;
  int m = 0;
  int strands = 0;
};

Outcome cmd_theorem1(const Theorem1Args& a, const Config& cfg) {
  BraidWord b = load_braid(a.braid, a.strands, true);
  LinkDiagram d = plat_closure(b);
  Theorem1Options opts;
  opts.conway = cfg.conway();
  Theorem1Report rep = theorem1_check(d, a.m, opts);
  Outcome o;
  Json& r = o.record;
  r["m"] = rep.m;
  r["components"] = rep.components;
  r["mu_vanishing_length"] = rep.vanishing_length;
  r["mu_vanish_through_m+1"] = rep.mu_vanish_m1;
  r["mu_vanish_through_m+2"] = rep.mu_vanish_m2;
  if (rep.first_nonzero) r["first_nonzero_mu"] = milnor_json(*rep.first_nonzero);
  r["profile"] = profile_json(rep.profile);
  r["next_profile"] = profile_json(rep.next_profile);
  r["sufficiency_consistent"] = rep.sufficiency_consistent;
  r["necessity_consistent"] = rep.necessity_consistent;
  o.alarm = !rep.consistent();
  return o;
}

struct DecomposeArgs {
  std::string word;
  int m = 2;
  int rank = 0;
};

Outcome cmd_decompose(const DecomposeArgs& a, const Config& cfg) {
  FreeWord w = load_word(a.word, a.rank);
  DecomposeOptions opts;
  opts.cap = std::max(cfg.magnus_cap, a.m);
  auto trees = decompose_simple_quasi(w, a.m, opts);
  Outcome o;
  Json list = Json::array();
  for (const auto& t : trees) list.push_back(to_string(t));
  o.record["word"] = to_string(reduce(w));
  o.record["m"] = a.m;
  o.record["trees"] = list;
  o.record["round_trip"] = flatten(trees, w.rank()) == reduce(w);
  o.alarm = !o.record["round_trip"].get<bool>();
  return o;
}

struct BrunnianArgs {
  std::string input = "-";
  bool weak = false;
};

Outcome cmd_brunnian(const BrunnianArgs& a, const Config& cfg) {
  LinkDiagram d = load_diagram(read_input(a.input));
  BrunnianOptions opts;
  opts.weak = a.weak;
  opts.simplify_budget = cfg.simplify_budget;
  opts.conway = cfg.conway();
  BrunnianReport rep = is_brunnian(d, opts);
  Outcome o;
  o.record["brunnian"] = rep.brunnian;
  o.record["inconclusive"] = rep.inconclusive;
  if (!rep.witness.empty()) o.record["witness"] = rep.witness;
  return o;
}

struct ScanArgs {
  std::string input = "-";
  int cap = kDefaultMuCap;
};

Outcome cmd_scan(const ScanArgs& a, const Config& cfg) {
  LinkDiagram d = load_diagram(read_input(a.input));
  TrivialityReport rep = corollary32_scan(d, a.cap, cfg.simplify_budget);
  Outcome o;
  o.record["status"] = to_string(rep.status);
  o.record["cap"] = rep.cap;
  o.record["crossings_after_simplify"] = rep.crossings_after_simplify;
  if (rep.first_nonzero) o.record["first_nonzero_mu"] = milnor_json(*rep.first_nonzero);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor invariants and finite type invariants of plat closures"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--magnus-cap", cfg.magnus_cap, "Magnus expansion degree cap")
      ->envname("PLATLAB_MAGNUS_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--conway-bound", cfg.conway_bound, "largest diagram for the full Conway polynomial")
      ->envname("PLATLAB_CONWAY_BOUND")
      ->check(CLI::PositiveNumber);
  app.add_option("--simplify-budget", cfg.simplify_budget, "Reidemeister move budget")
      ->envname("PLATLAB_SIMPLIFY_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  CloseArgs close;
  auto* c_close = app.add_subcommand("close", "close a pure braid into a link diagram");
  c_close->add_option("braid", close.braid, "braid word, e.g. \"A(2,3) s1^-2\"")->required();
  auto* plat_flag = c_close->add_flag("--plat", "plat closure (default)");
  c_close->add_flag("--trace", close.trace, "ordinary closure")->excludes(plat_flag);
  c_close->add_option("--strands", close.strands, "number of strands")->check(CLI::PositiveNumber);
  c_close->add_option("--format", close.format, "pd or gauss (text output)")->check(CLI::IsMember({"pd", "gauss"}));

  InvariantsArgs inv;
  auto* c_inv = app.add_subcommand("invariants", "linking numbers, mu-bar, Conway and profiles");
  c_inv->add_option("input", inv.input, "PD JSON or Gauss code file, - for stdin");
  c_inv->add_option("--mu-len", inv.mu_len, "list mu-bar of lengths 2..k");
  c_inv->add_flag("--conway", inv.conway, "Conway polynomial");
  c_inv->add_option("--profile", inv.profile, "finite type profile through order m")->check(CLI::NonNegativeNumber);

  GroupArgs grp;
  auto* c_grp = app.add_subcommand("group", "Wirtinger presentation and longitude words");
  c_grp->add_option("input", grp.input, "PD JSON or Gauss code file, - for stdin");
  c_grp->add_flag("--longitudes", grp.longitudes, "longitude words in the meridians");
  c_grp->add_option("--cap", grp.cap, "lower central series cap")->check(CLI::PositiveNumber);

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "check an m-equivalence certificate");
  c_ver->add_option("certificate", ver.input, "certificate JSON file, - for stdin");
  c_ver->add_option("--mu-cap", ver.mu_cap, "mu-bar cap for the comparison")->check(CLI::PositiveNumber);

  Theorem1Args th;
  auto* c_th = app.add_subcommand("theorem1", "compare mu-bar vanishing with finite type profiles");
  c_th->add_option("braid", th.braid, "pure braid word")->required();
  c_th->add_option("--m", th.m, "order")->required()->check(CLI::NonNegativeNumber);
  c_th->add_option("--strands", th.strands, "number of strands")->check(CLI::PositiveNumber);

  DecomposeArgs dec;
  auto* c_dec = app.add_subcommand("decompose", "write a word as a product of simple commutators");
  c_dec->add_option("word", dec.word, "word, e.g. \"[x1,x2][x2,[x1,x2]]\"")->required();
  c_dec->add_option("--m", dec.m, "minimum commutator length")->check(CLI::PositiveNumber);
  c_dec->add_option("--rank", dec.rank, "free group rank")->check(CLI::PositiveNumber);

  BrunnianArgs bru;
  auto* c_bru = app.add_subcommand("brunnian", "check that every proper sublink is trivial");
  c_bru->add_option("input", bru.input, "PD JSON or Gauss code file, - for stdin");
  c_bru->add_flag("--weak", bru.weak, "only delete one component at a time");

  ScanArgs scan;
  auto* c_scan = app.add_subcommand("scan", "triviality from vanishing mu-bar plus simplification");
  c_scan->add_option("input", scan.input, "PD JSON or Gauss code file, - for stdin");
  c_scan->add_option("--cap", scan.cap, "mu-bar cap")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    Outcome o;
    if (*c_close) o = cmd_close(close, cfg);
    if (*c_inv) o = cmd_invariants(inv, cfg);
    if (*c_grp) o = cmd_group(grp, cfg);
    if (*c_ver) o = cmd_verify(ver, cfg);
    if (*c_th) o = cmd_theorem1(th, cfg);
    if (*c_dec) o = cmd_decompose(dec, cfg);
    if (*c_bru) o = cmd_brunnian(bru, cfg);
    if (*c_scan) o = cmd_scan(scan, cfg);
    if (cfg.output == "json") {
      std::cout << o.record.dump() << "\n";
    } else if (!o.raw.empty()) {
      std::cout << o.raw << "\n";
    } else {
      print_text(o.record, "", std::cout);
    }
    if (o.alarm) {
      std::cerr << "soundness alarm: the report is inconsistent\n";
      return kExitAlarm;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
