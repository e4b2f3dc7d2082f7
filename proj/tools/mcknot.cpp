// Copyright 2026 The mcknot Authors.
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

// mcknot: command-line front end.  Exit status 0 on success, 1 when a
// verification finds a discrepancy, 2 on usage or input errors.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcknot/census.hpp"
#include "mcknot/diagram.hpp"
#include "mcknot/io.hpp"
#include "mcknot/laws.hpp"
#include "mcknot/parallel.hpp"
#include "mcknot/report.hpp"
#include "mcknot/skein.hpp"
#include "mcknot/split.hpp"

namespace {

using namespace mcknot;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string format = "text";
  unsigned workers = 1;
  std::uint64_t seed = 20260101;
  std::string checkpoint;
  std::string out;
  bool verbose = false;

  int n = 0;
  int max_n = 0;
  std::string type;
  std::string diagram;
  std::string table;
  std::string fixtures;
  std::string split_a, split_b;
  std::string file_a, file_b;
  int edge_a = 0, edge_b = 0;
  int basepoint = 0;
  int petal = 0;
  int count = 100;
  bool oracle = false;
  bool no_bounds = false;
};

Json law_json(const LawReport& r) {
  return {{"law", r.law}, {"n", r.n}, {"checked", r.checked}, {"violations", r.violation_count}};
}

void add_law(Report& rep, const LawReport& r) {
  rep.results["laws"].push_back(law_json(r));
  for (const auto& v : r.violations) rep.discrepancies.push_back(r.law + " (n=" + std::to_string(r.n) + "): " + v);
}

Json checks_json(const SpanReport& s) {
  Json out = Json::array();
  for (const auto& c : s.checks) out.push_back({{"bound", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok()}});
  return out;
}

/// A table file, or a fixture directory to build one from.
InvariantTable load_table(const std::string& path) {
  return std::filesystem::is_directory(path) ? build_invariant_table(path) : InvariantTable::load(path);
}

std::string diagram_text(const MultiCrossingDiagram& d) { return diagram_to_json(d).dump(); }

// skein ---------------------------------------------------------------------

Report skein_gen(const Config& cfg) {
  Report rep;
  const auto type = CrossingType::parse(cfg.type);
  auto rel = build_relation(type);
  const auto& cat = SplitCatalog::of(type.order());
  Json terms = Json::array();
  for (const auto& t : rel->packed())
    terms.push_back({{"split", cat.at(t.split).to_string()}, {"power", t.power}, {"multiplicity", t.multiplicity}});
  Json hist = Json::object();
  for (auto [p, m] : rel->power_histogram()) hist[std::to_string(p)] = m;
  rep.results = {{"type", type.to_string()},
                 {"width", rel->width()},
                 {"high", rel->high()},
                 {"low", rel->low()},
                 {"support", rel->support_size()},
                 {"total_multiplicity", rel->total_multiplicity()},
                 {"histogram", hist},
                 {"terms", terms}};
  return rep;
}

Report skein_widths(const Config& cfg) {
  Report rep;
  if (cfg.n < 2 || cfg.n > kMaxTypeOrder) throw std::out_of_range("--n must be in 2.." + std::to_string(kMaxTypeOrder));
  const auto types = all_types(cfg.n);
  constexpr std::size_t kChunk = 64;
  const std::size_t shards = (types.size() + kChunk - 1) / kChunk;
  Checkpoint checkpoint(cfg.checkpoint, "widths:" + std::to_string(cfg.n));
  using Counts = std::map<int, int>;
  const auto parts = checkpointed_map(
      shards, cfg.workers, checkpoint,
      [&](std::size_t s) {
        Counts c;
        for (std::size_t i = s * kChunk; i < std::min(types.size(), (s + 1) * kChunk); ++i)
          ++c[cfg.n < kMaxTypeOrder ? build_relation(types[i])->width() : SkeinCache::global().compute(types[i]).width()];
        return c;
      },
      [](const Counts& c) {
        Json j = Json::object();
        for (auto [w, k] : c) j[std::to_string(w)] = k;
        return j;
      },
      [](const Json& j) {
        Counts c;
        for (const auto& [w, k] : j.items()) c[std::stoi(w)] = k.get<int>();
        return c;
      });
  Counts total;
  for (const auto& p : parts)
    for (auto [w, k] : p) total[w] += k;
  Json widths = Json::object();
  for (auto [w, k] : total) widths[std::to_string(w)] = k;
  rep.results = {{"n", cfg.n}, {"types", types.size()}, {"widths", widths}, {"max_width", total.rbegin()->first},
                 {"bound", cfg.n * cfg.n / 2}};
  if (total.rbegin()->first > cfg.n * cfg.n / 2) rep.discrepancies.push_back("width exceeds floor(n^2/2)");
  const int extreme = (cfg.n < kMaxTypeOrder ? build_relation(CrossingType::standard(cfg.n))->width()
                                             : SkeinCache::global().compute(CrossingType::standard(cfg.n)).width());
  rep.results["standard_width"] = extreme;
  if (extreme != cfg.n * cfg.n / 2) rep.discrepancies.push_back("standard type width differs from floor(n^2/2)");
  return rep;
}

Report skein_laws(const Config& cfg) {
  Report rep;
  const int n = cfg.n;
  if (n < 2 || n > 6) throw std::out_of_range("--n must be in 2..6 for law checks");
  rep.results["n"] = n;
  rep.results["laws"] = Json::array();
  add_law(rep, check_split_distance(n));
  add_law(rep, check_move_closure(n));
  add_law(rep, check_rotation_counts(n));
  add_law(rep, check_rotation_bound(n));
  add_law(rep, check_width_bound(n));
  add_law(rep, check_reflection(n));
  if (n >= 3) {
    for (const auto& r : check_high_low(n)) add_law(rep, r);
  }
  if (n <= 5) {
    add_law(rep, check_istar(n));
    const auto pg = check_power_gap(n);
    add_law(rep, pg.law);
    rep.results["power_gap_negative_k_pairs"] = pg.negative_k_pairs;
    for (const auto& r : check_added_overstrand(n)) add_law(rep, r);
    add_law(rep, check_cover_monotone(n));
  }
  add_law(rep, check_leaf_paths(n));
  const auto surgery = check_arc_surgery(n);
  add_law(rep, surgery.forward);
  add_law(rep, surgery.inverse);
  rep.results["max_split_distance_across_surgery"] = surgery.max_split_distance;
  return rep;
}

// split ---------------------------------------------------------------------

Report split_dist(const Config& cfg) {
  Report rep;
  const auto a = Split::parse(cfg.split_a), b = Split::parse(cfg.split_b);
  if (a.order() != b.order()) throw std::invalid_argument("splits have different orders");
  const int d = split_distance(a, b);
  const int closure = closure_count(a, b);
  rep.results = {{"a", a.to_string()}, {"b", b.to_string()}, {"distance", d}, {"closure", closure}, {"n_minus_closure", a.order() - closure}};
  if (d != a.order() - closure) rep.discrepancies.push_back("distance differs from n - closure");
  return rep;
}

Report split_closure(const Config& cfg) {
  Report rep;
  const auto a = Split::parse(cfg.split_a), b = Split::parse(cfg.split_b);
  rep.results = {{"a", a.to_string()}, {"b", b.to_string()}, {"closure", closure_count(a, b)}};
  return rep;
}

Report split_enum(const Config& cfg) {
  Report rep;
  Json list = Json::array();
  for (const auto& s : enumerate_splits(cfg.n)) list.push_back(s.to_string());
  rep.results = {{"n", cfg.n}, {"count", list.size()}, {"splits", list}};
  return rep;
}

// diagrams ------------------------------------------------------------------

MultiCrossingDiagram load(const std::string& path) { return read_diagram_file(path).diagram; }

Report bracket_cmd(const Config& cfg) {
  Report rep;
  const auto d = load(cfg.diagram);
  const auto b = bracket(d);
  rep.results = {{"bracket", b.to_string()}, {"machine", poly_to_json(b)}, {"span", b.span()}};
  if (cfg.oracle) {
    const auto o = bracket_oracle(d);
    rep.results["oracle"] = o.to_string();
    if (o != b) rep.discrepancies.push_back("bracket differs from the double-crossing oracle");
  }
  return rep;
}

Report jones_cmd(const Config& cfg) {
  Report rep;
  const auto d = load(cfg.diagram);
  const auto j = jones(d);
  rep.results = {{"jones", j.to_string()}, {"machine", poly_to_json(j)}, {"writhe", writhe(d)}};
  if (!cfg.table.empty()) {
    const auto table = load_table(cfg.table);
    if (auto id = table.identify(j)) rep.results["identified"] = {{"name", id->name}, {"chirality", to_string(id->chirality)}};
    else rep.results["identified"] = "unknown";
  }
  return rep;
}

Report verify_bounds(const Config& cfg) {
  Report rep;
  const auto d = load(cfg.diagram);
  const auto s = verify_span_bound(d, cfg.petal);
  rep.results = {{"span", s.span}, {"width_sum", s.width_sum}, {"M", s.extremal.M}, {"m", s.extremal.m},
                 {"size_smax", s.extremal.size_smax}, {"size_smin", s.extremal.size_smin}, {"checks", checks_json(s)}};
  for (const auto& c : s.checks)
    if (!c.ok()) rep.discrepancies.push_back(c.name + ": " + std::to_string(c.lhs) + " > " + std::to_string(c.rhs) + " on " + diagram_text(d));
  for (const auto& note : s.notes) rep.discrepancies.push_back(note + " on " + diagram_text(d));
  return rep;
}

Report verify_states(const Config& cfg) {
  Report rep;
  const auto d = load(cfg.diagram);
  const auto e = extremal_states(d);
  rep.results = {{"M", e.M}, {"m", e.m}, {"size_smax", e.size_smax}, {"size_smin", e.size_smin},
                 {"high_state_attains_M", e.high_attains}, {"low_state_attains_m", e.low_attains}};
  if (!e.high_attains) rep.discrepancies.push_back("no all-high state attains M on " + diagram_text(d));
  if (!e.low_attains) rep.discrepancies.push_back("no all-low state attains m on " + diagram_text(d));
  return rep;
}

Report verify_corpus(const Config& cfg) {
  Report rep;
  if (cfg.n < 2 || cfg.n > 5) throw std::out_of_range("--n must be in 2..5 for the two-crossing corpus");
  std::mt19937_64 rng(cfg.seed);
  std::uint64_t checked = 0, knots = 0;
  for (int i = 0; i < cfg.count; ++i) {
    const auto d = random_two_crossing_diagram(cfg.n, rng);
    ++checked;
    if (validate(d).components == 1) ++knots;
    const auto b = bracket(d);
    if (b != bracket_oracle(d)) rep.discrepancies.push_back("bracket differs from oracle on " + diagram_text(d));
    const auto s = verify_span_bound(d, b);
    for (const auto& c : s.checks)
      if (!c.ok()) rep.discrepancies.push_back(c.name + " on " + diagram_text(d));
    for (const auto& note : s.notes) rep.discrepancies.push_back(note + " on " + diagram_text(d));
  }
  rep.results = {{"n", cfg.n}, {"seed", cfg.seed}, {"diagrams", checked}, {"knots", knots}};
  return rep;
}

Report compose_cmd(const Config& cfg) {
  Report rep;
  const auto a = load(cfg.file_a), b = load(cfg.file_b);
  const auto d = connect_sum(a, cfg.edge_a, b, cfg.edge_b);
  const auto ba = bracket(a), bb = bracket(b), bd = bracket(d);
  rep.results = {{"diagram", diagram_to_json(d)}, {"bracket", bd.to_string()}};
  if (bd != ba * bb) rep.discrepancies.push_back("bracket of the sum is not the product of the brackets");
  if (!cfg.out.empty()) write_text_file(cfg.out, diagram_to_json(d).dump() + "\n");
  return rep;
}

Report double_cmd(const Config& cfg) {
  Report rep;
  const auto d = load(cfg.diagram);
  const auto dd = double_order(d, cfg.basepoint);
  const auto j0 = jones(d), j1 = jones(dd);
  rep.results = {{"diagram", diagram_to_json(dd)}, {"crossings", dd.crossing_count()}, {"order", dd.order(0)},
                 {"components", validate(dd).components}, {"jones", j1.to_string()}};
  if (j0 != j1) rep.discrepancies.push_back("Jones changed: " + j0.to_string() + " vs " + j1.to_string());
  if (!cfg.out.empty()) write_text_file(cfg.out, diagram_to_json(dd).dump() + "\n");
  return rep;
}

// census --------------------------------------------------------------------

Json census_json(const CensusResult& r) {
  Json found = Json::array(), unknown = Json::array();
  for (const auto& e : r.found) {
    Json chir = Json::array();
    for (auto c : e.chiralities) chir.push_back(to_string(c));
    Json item{{"jones", e.jones.to_string()}, {"diagrams", e.diagrams}, {"witness", diagram_to_json(e.witness)}};
    if (e.name.empty()) {
      unknown.push_back(item);
    } else {
      item["name"] = e.name;
      item["chirality"] = chir;
      found.push_back(item);
    }
  }
  Json names = Json::array();
  for (const auto& n : r.names()) names.push_back(n);
  return {{"n", r.n}, {"candidates", r.candidates}, {"knot_diagrams", r.knots}, {"bound_checks", r.bound_checks},
          {"found_set", names}, {"found", found}, {"unknown", unknown}};
}

CensusResult run_census(const Config& cfg, int n, const InvariantTable& table) {
  CensusOptions opt;
  opt.workers = cfg.workers;
  opt.check_bounds = !cfg.no_bounds;
  opt.checkpoint = cfg.checkpoint;
  return census(n, table, opt);
}

void add_census_discrepancies(Report& rep, const CensusResult& r) {
  for (const auto& v : r.bound_violations) rep.discrepancies.push_back("n=" + std::to_string(r.n) + " " + v);
  for (const auto& v : r.witness_failures) rep.discrepancies.push_back("n=" + std::to_string(r.n) + " " + v);
}

Report census_cmd(const Config& cfg) {
  Report rep;
  const auto table = load_table(cfg.table);
  const auto r = run_census(cfg, cfg.n, table);
  rep.results = census_json(r);
  add_census_discrepancies(rep, r);
  if (!cfg.out.empty()) {
    std::filesystem::create_directories(cfg.out);
    int unknown = 0;
    std::vector<std::string> written;
    for (const auto& e : r.found) {
      std::string stem = e.name.empty() ? "unknown_" + std::to_string(unknown++) : e.name;
      for (auto& ch : stem)
        if (ch == '#') ch = '+';
      Json j = diagram_to_json(e.witness);
      if (!e.name.empty()) j["name"] = e.name;
      const std::string file = "n" + std::to_string(r.n) + "_" + stem + ".json";
      write_text_file(cfg.out + "/" + file, j.dump() + "\n");
      written.push_back(file);
    }
    rep.results["written"] = written;
  }
  return rep;
}

Report spectrum_cmd(const Config& cfg) {
  Report rep;
  if (cfg.max_n < kMinCensusOrder || cfg.max_n > kMaxCensusOrder)
    throw std::out_of_range("--max-n must be in " + std::to_string(kMinCensusOrder) + ".." + std::to_string(kMaxCensusOrder));
  const auto table = load_table(cfg.table);
  std::vector<CensusResult> runs;
  for (int n = kMinCensusOrder; n <= cfg.max_n; ++n) {
    runs.push_back(run_census(cfg, n, table));
    add_census_discrepancies(rep, runs.back());
  }
  const auto s = spectrum_report(table, runs);
  Json rows = Json::object();
  for (const auto& row : s.rows) {
    if (row.name == "0_1") continue;
    rows[row.name] = row.min_order ? Json(*row.min_order) : Json("none");
  }
  rep.results = {{"max_n", s.max_n}, {"min_single_crossing_order", rows}};
  for (const auto& i : s.inconsistencies) rep.discrepancies.push_back(i);
  return rep;
}

Report table_build(const Config& cfg) {
  Report rep;
  try {
    const auto table = build_invariant_table(cfg.fixtures);
    table.save(cfg.out);
    rep.results = {{"entries", table.size()}, {"out", cfg.out}};
  } catch (const TableCollision& e) {
    rep.results = {{"collision", {e.first(), e.second()}}};
    rep.discrepancies.push_back(e.what());
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"mcknot: multi-crossing knot diagrams, skein relations and the Kauffman bracket"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", cfg.seed, "Seed for sampled corpora");
  app.add_option("--checkpoint", cfg.checkpoint, "Checkpoint file for long runs");
  app.add_flag("-v,--verbose", cfg.verbose, "Report timing");

  Report (*action)(const Config&) = nullptr;
  std::string echo;
  auto route = [&](CLI::App* cmd, Report (*fn)(const Config&)) {
    cmd->callback([&, fn]() { action = fn; });
  };
  auto out_opt = [&](CLI::App* cmd) { cmd->add_option("--out", cfg.out, "Output file or directory"); };
  auto diagram_opt = [&](CLI::App* cmd) { cmd->add_option("--diagram", cfg.diagram, "Diagram file")->required(); };

  auto* skein = app.add_subcommand("skein", "Skein relations")->require_subcommand(1);
  auto* gen = skein->add_subcommand("gen", "Terms of one crossing type");
  gen->add_option("--type", cfg.type, "Crossing type, e.g. 13524")->required();
  route(gen, skein_gen);
  auto* widths = skein->add_subcommand("widths", "Realized widths over all types of order n");
  widths->add_option("--n", cfg.n, "Order")->required();
  route(widths, skein_widths);
  auto* laws = skein->add_subcommand("laws", "Brute-force law checks");
  laws->add_option("--n", cfg.n, "Order")->required();
  route(laws, skein_laws);

  auto* split = app.add_subcommand("split", "Splits")->require_subcommand(1);
  auto* dist = split->add_subcommand("dist", "Split distance");
  dist->add_option("--a", cfg.split_a)->required();
  dist->add_option("--b", cfg.split_b)->required();
  route(dist, split_dist);
  auto* closure = split->add_subcommand("closure", "Closure count");
  closure->add_option("--a", cfg.split_a)->required();
  closure->add_option("--b", cfg.split_b)->required();
  route(closure, split_closure);
  auto* enumerate = split->add_subcommand("enum", "All splits of order n");
  enumerate->add_option("--n", cfg.n)->required();
  route(enumerate, split_enum);

  auto* br = app.add_subcommand("bracket", "Kauffman bracket of a diagram");
  diagram_opt(br);
  br->add_flag("--oracle", cfg.oracle, "Also evaluate on the double-crossing path");
  route(br, bracket_cmd);
  auto* jo = app.add_subcommand("jones", "Jones polynomial of a knot diagram");
  diagram_opt(jo);
  jo->add_option("--table", cfg.table, "Invariant table file or fixture directory");
  route(jo, jones_cmd);

  auto* verify = app.add_subcommand("verify", "Bound verification")->require_subcommand(1);
  auto* bounds = verify->add_subcommand("bounds", "Span and component bounds");
  diagram_opt(bounds);
  bounds->add_option("--petal", cfg.petal, "Also check the petal bound for petal number P");
  route(bounds, verify_bounds);
  auto* states = verify->add_subcommand("states", "Extremal states");
  diagram_opt(states);
  route(states, verify_states);
  auto* corpus = verify->add_subcommand("corpus", "Seeded two-crossing corpus");
  corpus->add_option("--n", cfg.n)->required();
  corpus->add_option("--count", cfg.count)->check(CLI::PositiveNumber);
  route(corpus, verify_corpus);

  auto* compose = app.add_subcommand("compose", "Connected sum of two knot diagrams");
  compose->add_option("--a", cfg.file_a)->required();
  compose->add_option("--b", cfg.file_b)->required();
  compose->add_option("--edge-a", cfg.edge_a);
  compose->add_option("--edge-b", cfg.edge_b);
  out_opt(compose);
  route(compose, compose_cmd);

  auto* dbl = app.add_subcommand("double", "Double every crossing order");
  diagram_opt(dbl);
  dbl->add_option("--basepoint", cfg.basepoint, "Basepoint edge index");
  out_opt(dbl);
  route(dbl, double_cmd);

  auto* cen = app.add_subcommand("census", "Single-crossing knot census");
  cen->add_option("--n", cfg.n)->required();
  cen->add_option("--table", cfg.table, "Invariant table file or fixture directory")->required();
  cen->add_flag("--no-bounds", cfg.no_bounds, "Skip per-diagram bound checks");
  out_opt(cen);
  route(cen, census_cmd);

  auto* spectrum = app.add_subcommand("spectrum", "Least single-crossing order per knot");
  spectrum->add_option("--max-n", cfg.max_n)->required();
  spectrum->add_option("--table", cfg.table, "Invariant table file or fixture directory")->required();
  spectrum->add_flag("--no-bounds", cfg.no_bounds, "Skip per-diagram bound checks");
  route(spectrum, spectrum_cmd);

  auto* table = app.add_subcommand("table", "Invariant tables")->require_subcommand(1);
  auto* build = table->add_subcommand("build", "Build a table from fixture diagrams");
  build->add_option("--fixtures", cfg.fixtures)->required();
  build->add_option("--out", cfg.out)->required();
  route(build, table_build);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);

  try {
    const auto start = std::chrono::steady_clock::now();
    Report rep = action(cfg);
    rep.command = echo;
    if (cfg.verbose) rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << emit(rep, cfg.format == "machine" ? Format::machine : Format::text);
    return rep.ok() ? kExitOk : kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
