// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// faigle: command-line front end for the faigle library.
//
// Exit status: 0 success, 1 bad input or failed precondition, 2 internal
// invariant violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "faigle/faigle.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace faigle;

struct Options {
  std::string format = "text";
  std::string output;
  std::string log;
  std::uint64_t seed = 1;
  bool error_json = false;
};

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw PreconditionFailed("cannot open '" + path + "' for writing");
      out_ = &file_;
    }
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = &std::cout;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw PreconditionFailed("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The first keyword of the file decides what it holds.
std::string kind_of(const std::string& text) {
  std::istringstream in(text);
  io::Reader r(in);
  auto kw = r.peek_keyword();
  if (!kw) throw ParseError(0, "empty input");
  return *kw;
}

Lattice load_lattice(const std::string& path) {
  std::istringstream in(slurp(path));
  return io::read_lattice(in);
}

FaigleGeometry load_geometry(const std::string& path) {
  std::istringstream in(slurp(path));
  return io::read_geometry(in);
}

std::string set_text(const Poset& p, const ElemSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem x) {
    if (!first) out += ',';
    out += p.label(x);
    first = false;
  });
  return out + "}";
}

json set_json(const ElemSet& s) {
  json a = json::array();
  s.for_each([&](Elem x) { a.push_back(x); });
  return a;
}

json sets_json(const std::vector<ElemSet>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(set_json(s));
  return a;
}

json order_json(const Poset& p) {
  json o;
  o["size"] = p.size();
  json covers = json::array();
  for (auto [x, y] : p.covers()) covers.push_back({x, y});
  o["covers"] = covers;
  if (!p.labels().empty()) o["labels"] = p.labels();
  return o;
}

json geometry_json(const FaigleGeometry& g) {
  json o;
  o["ground"] = order_json(g.ground());
  o["flats"] = sets_json(g.flats());
  return o;
}

json congruence_json(const Congruence& c) { return sets_json(c.blocks()); }

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (opt.format == f) return;
  throw PreconditionFailed("format '" + opt.format +
                           "' is not available for this command");
}

// ---------------------------------------------------------------------------

void cmd_check_axioms(const Options& opt, const std::string& path,
                      std::size_t random) {
  require_format(opt, {"text", "json"});
  Sink out(opt.output);
  const std::string text = slurp(path);
  if (random > 0) {
    std::istringstream in(text);
    Poset p = io::read_poset(in);
    auto families = testkit::random_closure_candidates(p, random, opt.seed);
    std::size_t agree = 0, geometries = 0;
    for (const auto& f : families) {
      AxiomReport r = check_axioms(FaigleGeometry(p, f));
      if (r.holds_cp == r.holds_fep) ++agree;
      if (r.all()) ++geometries;
    }
    if (opt.format == "json") {
      *out << json{{"samples", families.size()},
                   {"cp_equals_fep", agree},
                   {"geometries", geometries},
                   {"seed", opt.seed}}
                  .dump()
           << '\n';
    } else {
      *out << "samples " << families.size() << "\ncp_equals_fep " << agree
           << "\ngeometries " << geometries << '\n';
    }
    detail::ensure(agree == families.size(), "CP and FEP disagree on a sample");
    return;
  }

  std::istringstream in(text);
  FaigleGeometry g = io::read_geometry(in);
  const Poset& p = g.ground();
  AxiomReport r = check_axioms(g);
  if (opt.format == "json") {
    json o;
    o["holds_cap"] = r.holds_cap;
    o["holds_down"] = r.holds_down;
    o["holds_pr"] = r.holds_pr;
    o["holds_cp"] = r.holds_cp;
    o["holds_fep"] = r.holds_fep;
    if (r.cap_witness)
      o["cap_witness"] = {{"x", set_json(r.cap_witness->x)},
                          {"y", set_json(r.cap_witness->y)}};
    if (r.down_witness)
      o["down_witness"] = {{"flat", set_json(r.down_witness->flat)},
                           {"member", r.down_witness->member},
                           {"below", r.down_witness->below}};
    if (r.pr_witness) {
      json w;
      if (r.pr_witness->u) w["u"] = *r.pr_witness->u;
      else w["u"] = nullptr;
      w["strict"] = r.pr_witness->strict;
      o["pr_witness"] = w;
    }
    if (r.cp_witness)
      o["cp_witness"] = {{"u", r.cp_witness->u}, {"x", set_json(r.cp_witness->x)}};
    if (r.fep_witness)
      o["fep_witness"] = {{"u", r.fep_witness->u},
                          {"v", r.fep_witness->v},
                          {"s", set_json(r.fep_witness->s)}};
    *out << o.dump() << '\n';
    return;
  }
  auto flag = [](bool b) { return b ? "true" : "false"; };
  *out << "holds_cap " << flag(r.holds_cap);
  if (r.cap_witness)
    *out << "  x=" << set_text(p, r.cap_witness->x)
         << " y=" << set_text(p, r.cap_witness->y);
  *out << "\nholds_down " << flag(r.holds_down);
  if (r.down_witness)
    *out << "  flat=" << set_text(p, r.down_witness->flat)
         << " member=" << p.label(r.down_witness->member)
         << " below=" << p.label(r.down_witness->below);
  *out << "\nholds_pr " << flag(r.holds_pr);
  if (r.pr_witness) {
    if (!r.pr_witness->u) *out << "  missing={}";
    else
      *out << "  missing=" << (r.pr_witness->strict ? "strict " : "")
           << "down-set of " << p.label(*r.pr_witness->u);
  }
  *out << "\nholds_cp " << flag(r.holds_cp);
  if (r.cp_witness)
    *out << "  u=" << p.label(r.cp_witness->u)
         << " X=" << set_text(p, r.cp_witness->x);
  *out << "\nholds_fep " << flag(r.holds_fep);
  if (r.fep_witness)
    *out << "  u=" << p.label(r.fep_witness->u)
         << " v=" << p.label(r.fep_witness->v)
         << " S=" << set_text(p, r.fep_witness->s);
  *out << "\nfaigle_geometry " << flag(r.all()) << '\n';
}

void cmd_geom(const Options& opt, const std::string& path) {
  require_format(opt, {"text", "json", "dot"});
  Lattice l = load_lattice(path);
  FaigleGeometry g = geom_of_lattice(l);
  Sink out(opt.output);
  if (opt.format == "json") *out << geometry_json(g).dump() << '\n';
  else if (opt.format == "dot") io::write_dot(*out, g.ground(), "jir");
  else io::write_geometry(*out, g);
}

Lattice labelled_flat_lattice(FaigleGeometry& g) {
  if (!g.verify()) {
    AxiomReport r = check_axioms(g);
    std::string failed;
    if (!r.holds_cap) failed += " F_cap";
    if (!r.holds_down) failed += " F_down";
    if (!r.holds_pr) failed += " Pr";
    if (!r.holds_cp) failed += " CP";
    throw NotVerifiedGeometry("family fails:" + failed);
  }
  FlatLattice fl = lattice_of_flats(g);
  std::vector<std::string> labels;
  for (const auto& f : fl.flats) labels.push_back(set_text(g.ground(), f));
  Lattice l = fl.lattice;
  l.set_labels(std::move(labels));
  return l;
}

void write_lattice_as(const Options& opt, std::ostream& out, const Lattice& l) {
  if (opt.format == "json") out << order_json(l.order()).dump() << '\n';
  else if (opt.format == "dot") io::write_dot(out, l);
  else io::write_lattice(out, l);
}

void cmd_flats(const Options& opt, const std::string& path) {
  require_format(opt, {"text", "json", "dot"});
  FaigleGeometry g = load_geometry(path);
  Lattice l = labelled_flat_lattice(g);
  Sink out(opt.output);
  write_lattice_as(opt, *out, l);
}

void cmd_closure(const Options& opt, const std::string& path,
                 const std::string& set) {
  require_format(opt, {"text", "json"});
  FaigleGeometry g = load_geometry(path);
  ElemSet x = io::Reader::parse_set(set, g.size());
  ElemSet c = closure(g, x);
  Sink out(opt.output);
  if (opt.format == "json")
    *out << json{{"set", set_json(x)}, {"closure", set_json(c)}}.dump() << '\n';
  else
    *out << set_text(g.ground(), c) << '\n';
}

// Step records go to --log when given; with --format json they also lead
// the output, one line each, before the result object.
class StepLog {
 public:
  explicit StepLog(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw PreconditionFailed("cannot open '" + path + "' for writing");
    }
  }
  void add(const json& record) { records_.push_back(record); }
  void flush(const Options& opt, std::ostream& out) {
    for (const auto& r : records_) {
      if (file_.is_open()) file_ << r.dump() << '\n';
      if (opt.format == "json") out << r.dump() << '\n';
    }
  }

 private:
  std::ofstream file_;
  std::vector<json> records_;
};

void write_extension(const Options& opt, std::ostream& out, const Lattice& k,
                     const std::vector<Elem>& embedding) {
  if (opt.format == "json") {
    json o;
    o["lattice"] = order_json(k.order());
    o["embedding"] = embedding;
    out << o.dump() << '\n';
    return;
  }
  if (opt.format == "dot") {
    io::write_dot(out, k);
    return;
  }
  io::write_lattice(out, k);
  out << "# embedding";
  for (Elem x : embedding) out << ' ' << x;
  out << '\n';
}

void cmd_extend_geometric(const Options& opt, const std::string& path) {
  require_format(opt, {"text", "json", "dot"});
  Lattice l = load_lattice(path);
  GeometricExtension ext = extend_to_geometric(l);
  StepLog log(opt.log);
  for (std::size_t i = 0; i < ext.steps.size(); ++i) {
    const LoweringStep& s = ext.steps[i];
    json r;
    r["step"] = i + 1;
    r["a"] = s.a;
    r["T_size"] = s.t.size();
    r["N_size"] = s.n.size();
    r["T"] = sets_json(s.t);
    r["N"] = sets_json(s.n);
    r["k_before"] = s.k_before;
    r["k_after"] = s.k_after;
    log.add(r);
  }
  Sink out(opt.output);
  log.flush(opt, *out);
  write_extension(opt, *out, ext.lattice, ext.embedding);
}

void cmd_extend_rectangular(const Options& opt, const std::string& path) {
  require_format(opt, {"text", "json", "dot"});
  Lattice l = load_lattice(path);
  RectangularExtension ext = extend_to_rectangular(l);
  StepLog log(opt.log);
  if (ext.chain_corner) {
    const CornerData& c = *ext.chain_corner;
    log.add({{"step", 0},
             {"corner", {{"a", c.a}, {"c", c.c}, {"b", c.b}, {"d", c.d}}},
             {"size", l.size() + 1}});
  }
  for (std::size_t i = 0; i < ext.steps.size(); ++i) {
    const RectStep& s = ext.steps[i];
    json r;
    r["step"] = i + 1;
    r["a"] = s.a;
    r["b"] = s.b;
    r["z0"] = s.z0;
    r["z1"] = s.z1;
    r["z2"] = s.z2;
    r["B0"] = set_json(s.b0);
    r["delta_before"] = s.delta_before;
    r["delta_after"] = s.delta_after;
    r["size"] = s.size_after;
    log.add(r);
  }
  Sink out(opt.output);
  log.flush(opt, *out);
  write_extension(opt, *out, ext.lattice, ext.embedding);
}

void cmd_congruences(const Options& opt, const std::string& path, bool oracle) {
  require_format(opt, {"text", "json"});
  Lattice l = load_lattice(path);
  CongruenceLattice con = all_congruences(l);
  std::optional<bool> agrees;
  if (oracle) {
    auto filtered = testkit::congruences_by_partition_filter(l);
    std::set<Congruence> a(con.members.begin(), con.members.end());
    std::set<Congruence> b(filtered.begin(), filtered.end());
    agrees = a == b;
  }
  Sink out(opt.output);
  if (opt.format == "json") {
    json o;
    o["count"] = con.size();
    json list = json::array();
    for (const auto& c : con.members) list.push_back(congruence_json(c));
    o["congruences"] = list;
    if (agrees) o["oracle_agrees"] = *agrees;
    *out << o.dump() << '\n';
  } else {
    *out << "# " << con.size() << " congruences\n";
    for (const auto& c : con.members) io::write_congruence(*out, c);
    if (agrees) *out << "# oracle " << (*agrees ? "agrees" : "DISAGREES") << '\n';
  }
  if (agrees) detail::ensure(*agrees, "congruence enumeration disagrees with the oracle");
}

void cmd_verify_cpe(const Options& opt, const std::string& small_path,
                    const std::string& big_path, const std::string& map) {
  require_format(opt, {"text", "json"});
  Lattice l = load_lattice(small_path);
  Lattice k = load_lattice(big_path);
  std::vector<Elem> e;
  if (map.empty()) {
    detail::require(l.size() <= k.size(), "source is larger than target");
    for (Elem x = 0; x < l.size(); ++x) e.push_back(x);
  } else {
    std::string s = map;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream ss(s);
    std::string tok;
    while (ss >> tok) {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size()) throw PreconditionFailed("bad map entry '" + tok + "'");
      if (v >= k.size()) throw IndexOutOfRange("map entry " + tok + " out of range");
      e.push_back(v);
    }
  }
  Embedding emb(l, k, e);
  const bool cpe = is_congruence_preserving_extension(emb);
  Sink out(opt.output);
  if (opt.format == "json")
    *out << json{{"congruence_preserving", cpe},
                 {"con_source", all_congruences(l).size()},
                 {"con_target", all_congruences(k).size()}}
                .dump()
         << '\n';
  else
    *out << "congruence_preserving " << (cpe ? "true" : "false") << '\n';
}

void cmd_roundtrip(const Options& opt, const std::string& path) {
  require_format(opt, {"text", "json"});
  const std::string text = slurp(path);
  std::istringstream in(text);
  bool ok = false;
  std::string what;
  if (kind_of(text) == "geometry") {
    FaigleGeometry g = io::read_geometry(in);
    if (!g.verify()) throw NotVerifiedGeometry("family is not a Faigle geometry");
    ok = roundtrip_geometry(g);
    what = "geometry";
  } else {
    Lattice l = io::read_lattice(in);
    ok = roundtrip_lattice(l);
    what = "lattice";
  }
  Sink out(opt.output);
  if (opt.format == "json")
    *out << json{{"input", what}, {"roundtrip", ok}}.dump() << '\n';
  else
    *out << "roundtrip " << (ok ? "true" : "false") << '\n';
  detail::ensure(ok, "round trip did not return an isomorphic copy");
}

void cmd_delta(const Options& opt, const std::string& path) {
  require_format(opt, {"text", "json"});
  Lattice l = load_lattice(path);
  DeltaResult d = delta(l);
  Sink out(opt.output);
  const Poset& p = l.order();
  if (opt.format == "json")
    *out << json{{"delta", d.value},
                 {"A", set_json(d.best.a)},
                 {"B", set_json(d.best.b)},
                 {"slim_rectangular", is_slim_rectangular(l)}}
                .dump()
         << '\n';
  else
    *out << "delta " << d.value << "\nA " << set_text(p, d.best.a) << "\nB "
         << set_text(p, d.best.b) << '\n';
}

std::size_t default_max_elements() {
  if (const char* env = std::getenv("FAIGLE_MAX_ELEMENTS")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw PreconditionFailed("FAIGLE_MAX_ELEMENTS is not a number");
    }
  }
  return 7;
}

void cmd_enumerate(const Options& opt, std::size_t max, const std::string& filter,
                   const std::string& dir) {
  require_format(opt, {"text", "json"});
  testkit::EnumConfig cfg;
  cfg.max_elements = max == 0 ? default_max_elements() : max;
  cfg.filter = testkit::parse_filter(filter);
  cfg.seed = opt.seed;
  std::vector<Lattice> ls = testkit::enumerate_lattices(cfg);
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    std::size_t width = std::to_string(ls.size()).size();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      std::ostringstream name;
      name << "lattice_" << std::setw(static_cast<int>(width))
           << std::setfill('0') << i << (opt.format == "json" ? ".json" : ".txt");
      std::ofstream f(std::filesystem::path(dir) / name.str());
      if (!f) throw PreconditionFailed("cannot write into '" + dir + "'");
      if (opt.format == "json") f << order_json(ls[i].order()).dump() << '\n';
      else io::write_lattice(f, ls[i]);
    }
    std::cout << ls.size() << " lattices written to " << dir << '\n';
    return;
  }
  Sink out(opt.output);
  for (const auto& l : ls) {
    if (opt.format == "json") *out << order_json(l.order()).dump() << '\n';
    else io::write_lattice(*out, l);
  }
}

void cmd_export_dot(const Options& opt, const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  const std::string kind = kind_of(text);
  Sink out(opt.output);
  if (kind == "poset") {
    io::write_dot(*out, io::read_poset(in));
  } else if (kind == "geometry") {
    FaigleGeometry g = io::read_geometry(in);
    io::write_dot(*out, labelled_flat_lattice(g), "flats");
  } else {
    io::write_dot(*out, io::read_lattice(in));
  }
}

void report(const Options& opt, const Error& e) {
  if (opt.error_json) {
    json o{{"error", e.kind()}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) o["line"] = pe->line();
    std::cerr << o.dump() << '\n';
  } else {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faigle geometries, semimodular lattices and their extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("-o,--output", opt.output, "Output file (default stdout)");
  app.add_option("--log", opt.log, "Write the step log (JSON lines) here");
  app.add_option("--seed", opt.seed, "Seed for random generators");
  app.add_flag("--error-json", opt.error_json, "Report errors as JSON on stderr");

  std::string input, second, set, map, filter = "all", dir;
  std::size_t random = 0, max = 0;
  bool oracle = false;
  std::function<void()> run;

  auto* sc = app.add_subcommand("check-axioms", "Check the five axioms of a family");
  sc->add_option("input", input, "Geometry file (or poset file with --random)")->required();
  sc->add_option("--random", random, "Check this many random families on a poset");
  sc->callback([&] { run = [&] { cmd_check_axioms(opt, input, random); }; });

  sc = app.add_subcommand("geom", "Geometry of join-irreducibles of a semimodular lattice");
  sc->add_option("input", input, "Lattice file")->required();
  sc->callback([&] { run = [&] { cmd_geom(opt, input); }; });

  sc = app.add_subcommand("flats", "Lattice of flats of a geometry");
  sc->add_option("input", input, "Geometry file")->required();
  sc->callback([&] { run = [&] { cmd_flats(opt, input); }; });

  sc = app.add_subcommand("closure", "Closure of a set of points");
  sc->add_option("input", input, "Geometry file")->required();
  sc->add_option("--set", set, "Points, comma separated");
  sc->callback([&] { run = [&] { cmd_closure(opt, input, set); }; });

  sc = app.add_subcommand("extend-geometric", "Length-preserving geometric extension");
  sc->add_option("input", input, "Semimodular lattice file")->required();
  sc->callback([&] { run = [&] { cmd_extend_geometric(opt, input); }; });

  sc = app.add_subcommand("extend-rectangular",
                          "Congruence-preserving slim rectangular extension");
  sc->add_option("input", input, "Slim semimodular lattice file")->required();
  sc->callback([&] { run = [&] { cmd_extend_rectangular(opt, input); }; });

  sc = app.add_subcommand("congruences", "All congruences of a lattice");
  sc->add_option("input", input, "Lattice file")->required();
  sc->add_flag("--oracle", oracle, "Cross-check by filtering all partitions");
  sc->callback([&] { run = [&] { cmd_congruences(opt, input, oracle); }; });

  sc = app.add_subcommand("verify-cpe", "Is K a congruence-preserving extension of L?");
  sc->add_option("source", input, "Lattice file for L")->required();
  sc->add_option("target", second, "Lattice file for K")->required();
  sc->add_option("--map", map, "Images of 0,1,... of L in K (default identity)");
  sc->callback([&] { run = [&] { cmd_verify_cpe(opt, input, second, map); }; });

  sc = app.add_subcommand("roundtrip", "Lattice -> geometry -> lattice, or the reverse");
  sc->add_option("input", input, "Lattice or geometry file")->required();
  sc->callback([&] { run = [&] { cmd_roundtrip(opt, input); }; });

  sc = app.add_subcommand("delta", "Cross-chain comparabilities of the best Jir split");
  sc->add_option("input", input, "Slim semimodular lattice file")->required();
  sc->callback([&] { run = [&] { cmd_delta(opt, input); }; });

  sc = app.add_subcommand("enumerate", "All lattices up to isomorphism");
  sc->add_option("--max", max, "Largest size (default $FAIGLE_MAX_ELEMENTS or 7)");
  sc->add_option("--filter", filter, "all | semimodular | slim-semimodular");
  sc->add_option("--dir", dir, "Write one file per lattice into this directory");
  sc->callback([&] { run = [&] { cmd_enumerate(opt, max, filter, dir); }; });

  sc = app.add_subcommand("export-dot", "Hasse diagram in Graphviz format");
  sc->add_option("input", input, "Poset, lattice or geometry file")->required();
  sc->callback([&] { run = [&] { cmd_export_dot(opt, input); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    run();
  } catch (const Error& e) {
    report(opt, e);
    return e.is_invariant_violation() ? 2 : 1;
  } catch (const std::exception& e) {
    report(opt, PreconditionFailed(e.what()));
    return 1;
  }
  return 0;
}
