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

#pragma once

// Knot identification by Jones polynomial and the census of knots that admit
// a diagram with a single n-crossing.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcknot/diagram.hpp"
#include "mcknot/io.hpp"
#include "mcknot/parallel.hpp"
#include "mcknot/skein.hpp"
#include "mcknot/split.hpp"

namespace mcknot {

inline constexpr int kMinCensusOrder = 3;
inline constexpr int kMaxCensusOrder = 7;

inline void check_census_order(int n) {
  if (n < kMinCensusOrder || n > kMaxCensusOrder)
    throw std::out_of_range("census order must be in " + std::to_string(kMinCensusOrder) + ".." + std::to_string(kMaxCensusOrder) +
                            ", got " + std::to_string(n));
}

/// Number of (type, exterior split) pairs before the knot filter.
inline std::uint64_t single_crossing_candidates(int n) {
  check_census_order(n);
  return all_types(n).size() * catalan(n);
}

/// Every single-crossing knot diagram of order n, ordered by crossing type
/// and then by exterior split.
inline std::vector<MultiCrossingDiagram> single_crossing_diagrams(int n) {
  check_census_order(n);
  std::vector<MultiCrossingDiagram> out;
  for (const auto& t : all_types(n))
    for (const auto& s : SplitCatalog::of(n).splits()) {
      auto d = single_crossing_diagram(t, s);
      if (validate(d).components == 1) out.push_back(std::move(d));
    }
  return out;
}

/// The petal closure (0,1)(2,3)...(2p-2,2p-1).
inline Split petal_closure(int p) {
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < p; ++k) pairs.emplace_back(2 * k, 2 * k + 1);
  return Split::from_pairs(p, pairs);
}

inline MultiCrossingDiagram petal_diagram(const std::vector<int>& heights) {
  const int p = static_cast<int>(heights.size());
  if (p % 2 == 0) throw std::invalid_argument("petal diagram needs an odd number of strands, got " + std::to_string(p));
  return single_crossing_diagram(CrossingType::from_heights(heights), petal_closure(p));
}

inline bool is_petal_closure(const MultiCrossingDiagram& d) {
  if (d.crossing_count() != 1 || d.free_loops != 0 || d.order(0) % 2 == 0) return false;
  for (const auto& [a, b] : d.edges)
    if (std::min(a.spoke, b.spoke) % 2 != 0 || std::abs(a.spoke - b.spoke) != 1) return false;
  return true;
}

using JonesKey = LaurentPoly::MachineForm;

/// The smaller machine form of j and its mirror.
inline JonesKey jones_key(const LaurentPoly& j) {
  auto a = j.machine_form();
  auto b = j.mirror().machine_form();
  return machine_less(b, a) ? b : a;
}

enum class Chirality { same, mirror, amphichiral };

inline const char* to_string(Chirality c) {
  switch (c) {
    case Chirality::same: return "same";
    case Chirality::mirror: return "mirror";
    case Chirality::amphichiral: return "amphichiral";
  }
  return "?";
}

struct Identification {
  std::string name;
  Chirality chirality = Chirality::same;
};

class TableCollision : public std::runtime_error {
 public:
  TableCollision(const std::string& first, const std::string& second)
      : std::runtime_error("Jones collision between " + first + " and " + second), first_(first), second_(second) {}
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_, second_;
};

/// Jones polynomial (up to mirror) to knot name.
class InvariantTable {
 public:
  struct Entry {
    std::string name;
    LaurentPoly jones;
  };

  void add(const std::string& name, const LaurentPoly& jones) {
    auto key = jones_key(jones);
    auto [it, inserted] = index_.emplace(key, entries_.size());
    if (!inserted) throw TableCollision(entries_[it->second].name, name);
    entries_.push_back({name, jones});
  }

  std::optional<Identification> identify(const LaurentPoly& j) const {
    auto it = index_.find(jones_key(j));
    if (it == index_.end()) return std::nullopt;
    const Entry& e = entries_[it->second];
    Identification id{e.name, Chirality::same};
    if (j == j.mirror()) id.chirality = Chirality::amphichiral;
    else if (j != e.jones) id.chirality = Chirality::mirror;
    return id;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  Json to_json() const {
    Json out = Json::array();
    for (const auto& e : entries_) out.push_back({{"name", e.name}, {"jones", poly_to_json(e.jones)}});
    return out;
  }

  static InvariantTable from_json(const Json& j) {
    if (!j.is_array()) throw InputError("invariant table must be a list of {name, jones}");
    InvariantTable t;
    for (const auto& e : j) {
      if (!e.is_object() || !e.contains("name") || !e.contains("jones")) throw InputError("invariant table entry needs name and jones");
      t.add(e["name"].get<std::string>(), poly_from_json(e["jones"]));
    }
    return t;
  }

  static InvariantTable load(const std::string& path) { return from_json(read_json_file(path)); }
  void save(const std::string& path) const { write_text_file(path, to_json().dump(1) + "\n"); }

 private:
  std::vector<Entry> entries_;
  std::map<JonesKey, std::size_t> index_;
};

inline std::optional<Identification> identify(const LaurentPoly& j, const InvariantTable& table) { return table.identify(j); }

/// Fixture diagram files in `dir` (sorted by file name), skipping JSON
/// files that are not diagrams.
inline std::vector<std::pair<std::string, NamedDiagram>> read_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& f : fs::directory_iterator(dir))
    if (f.path().extension() == ".json") files.push_back(f.path().string());
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, NamedDiagram>> out;
  for (const auto& path : files) {
    const Json j = read_json_file(path);
    if (!j.is_object() || !j.contains("edges")) continue;
    auto nd = read_diagram_file(path);
    if (nd.name.empty()) nd.name = fs::path(path).stem().string();
    out.emplace_back(path, std::move(nd));
  }
  return out;
}

/// Table from fixture diagrams, each evaluated on the double-crossing path.
inline InvariantTable build_invariant_table(const std::vector<NamedDiagram>& fixtures) {
  InvariantTable t;
  for (const auto& f : fixtures) t.add(f.name, jones_oracle(f.diagram));
  return t;
}

inline InvariantTable build_invariant_table(const std::string& dir) {
  std::vector<NamedDiagram> fixtures;
  for (auto& [path, nd] : read_fixtures(dir)) fixtures.push_back(std::move(nd));
  return build_invariant_table(fixtures);
}

/// One knot type realized in a census.  `name` is empty when Jones is not in
/// the table.
struct CensusEntry {
  std::string name;
  JonesKey key;
  LaurentPoly jones;  // Jones of the witness
  MultiCrossingDiagram witness;
  std::set<Chirality> chiralities;
  std::uint64_t diagrams = 0;
};

struct CensusResult {
  int n = 0;
  std::uint64_t candidates = 0;
  std::uint64_t knots = 0;
  std::uint64_t bound_checks = 0;
  std::vector<CensusEntry> found;  // named entries by name, then unknown ones by key
  std::vector<std::string> bound_violations;
  std::vector<std::string> witness_failures;

  /// Names of identified nontrivial knots.
  std::set<std::string> names() const {
    std::set<std::string> out;
    for (const auto& e : found)
      if (!e.name.empty() && e.name != "0_1") out.insert(e.name);
    return out;
  }
  bool contains(const std::string& name) const { return names().count(name) != 0; }
  std::size_t unknown_count() const {
    return static_cast<std::size_t>(std::count_if(found.begin(), found.end(), [](const CensusEntry& e) { return e.name.empty(); }));
  }
  bool ok() const { return bound_violations.empty() && witness_failures.empty(); }
};

struct CensusOptions {
  unsigned workers = 1;
  bool check_bounds = true;
  std::string checkpoint;  // empty: no checkpoint file
};

namespace detail {

/// Per crossing type: distinct Jones polynomials with first witness and
/// multiplicity.
struct CensusShard {
  struct Hit {
    LaurentPoly jones;
    int first_exterior = 0;
    std::uint64_t count = 0;
  };
  std::uint64_t knots = 0;
  std::uint64_t bound_checks = 0;
  std::vector<Hit> hits;  // by machine form
  std::vector<std::string> violations;

  Json to_json() const {
    Json h = Json::array();
    for (const auto& x : hits) h.push_back({{"jones", poly_to_json(x.jones)}, {"first", x.first_exterior}, {"count", x.count}});
    return {{"knots", knots}, {"bound_checks", bound_checks}, {"hits", h}, {"violations", violations}};
  }
  static CensusShard from_json(const Json& j) {
    CensusShard s;
    s.knots = j.at("knots").get<std::uint64_t>();
    s.bound_checks = j.at("bound_checks").get<std::uint64_t>();
    for (const auto& x : j.at("hits")) s.hits.push_back({poly_from_json(x.at("jones")), x.at("first").get<int>(), x.at("count").get<std::uint64_t>()});
    s.violations = j.at("violations").get<std::vector<std::string>>();
    return s;
  }
};

inline std::string describe(const MultiCrossingDiagram& d) {
  std::string out = "type " + d.crossings.front().to_string() + " exterior ";
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : d.edges) pairs.emplace_back(std::min(a.spoke, b.spoke), std::max(a.spoke, b.spoke));
  std::sort(pairs.begin(), pairs.end());
  for (auto [a, b] : pairs) out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return out;
}

inline CensusShard census_shard(const CrossingType& type, bool check_bounds) {
  CensusShard shard;
  std::map<JonesKey, std::size_t> seen;
  const auto& cat = SplitCatalog::of(type.order());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto d = single_crossing_diagram(type, cat.at(static_cast<int>(i)));
    if (validate(d).components != 1) continue;
    ++shard.knots;
    const LaurentPoly b = bracket(d);
    const LaurentPoly j = jones_from_bracket(b, writhe(d));
    auto [it, inserted] = seen.emplace(j.machine_form(), shard.hits.size());
    if (inserted) shard.hits.push_back({j, static_cast<int>(i), 0});
    ++shard.hits[it->second].count;
    if (check_bounds) {
      ++shard.bound_checks;
      const auto report = verify_span_bound(d, b, is_petal_closure(d) ? d.order(0) : 0);
      for (const auto& c : report.checks)
        if (!c.ok()) shard.violations.push_back(describe(d) + ": " + c.name + " (" + std::to_string(c.lhs) + " > " + std::to_string(c.rhs) + ")");
      for (const auto& note : report.notes) shard.violations.push_back(describe(d) + ": " + note);
      const auto comp = check_split_components(d);
      if (!comp.ok()) shard.violations.push_back(describe(d) + ": " + comp.name);
    }
  }
  return shard;
}

}  // namespace detail

/// Enumerates every single n-crossing knot diagram, identifies its Jones
/// polynomial against `table`, and re-verifies each witness on the
/// double-crossing path.
inline CensusResult census(int n, const InvariantTable& table, const CensusOptions& options = {}) {
  check_census_order(n);
  const auto types = all_types(n);
  for (const auto& t : types) build_relation(t);  // warm the shared cache
  Checkpoint checkpoint(options.checkpoint, "census:" + std::to_string(n) + (options.check_bounds ? ":bounds" : ""));
  const auto shards = checkpointed_map(
      types.size(), options.workers, checkpoint, [&](std::size_t i) { return detail::census_shard(types[i], options.check_bounds); },
      [](const detail::CensusShard& s) { return s.to_json(); }, [](const Json& j) { return detail::CensusShard::from_json(j); });

  CensusResult r;
  r.n = n;
  r.candidates = single_crossing_candidates(n);
  std::map<JonesKey, CensusEntry> by_key;
  const auto& cat = SplitCatalog::of(n);
  for (std::size_t ti = 0; ti < shards.size(); ++ti) {
    const auto& s = shards[ti];
    r.knots += s.knots;
    r.bound_checks += s.bound_checks;
    r.bound_violations.insert(r.bound_violations.end(), s.violations.begin(), s.violations.end());
    for (const auto& hit : s.hits) {
      auto key = jones_key(hit.jones);
      auto [it, inserted] = by_key.try_emplace(key);
      CensusEntry& e = it->second;
      if (inserted) {
        e.key = key;
        e.jones = hit.jones;
        e.witness = single_crossing_diagram(types[ti], cat.at(hit.first_exterior));
        if (auto id = table.identify(hit.jones)) e.name = id->name;
      }
      e.diagrams += hit.count;
      if (auto id = table.identify(hit.jones)) e.chiralities.insert(id->chirality);
    }
  }
  for (auto& [key, e] : by_key) {
    const auto v = validate(e.witness);
    if (v.components != 1 || e.witness.crossing_count() != 1 || e.witness.order(0) != n)
      r.witness_failures.push_back(detail::describe(e.witness) + ": witness is not a single " + std::to_string(n) + "-crossing knot");
    else if (jones_oracle(e.witness) != e.jones)
      r.witness_failures.push_back(detail::describe(e.witness) + ": Jones differs on the double-crossing path");
    r.found.push_back(std::move(e));
  }
  std::stable_sort(r.found.begin(), r.found.end(), [](const CensusEntry& a, const CensusEntry& b) {
    if (a.name.empty() != b.name.empty()) return b.name.empty();
    if (a.name != b.name) return a.name < b.name;
    return machine_less(a.key, b.key);
  });
  return r;
}

struct SpectrumRow {
  std::string name;
  std::optional<int> min_order;  // least n with a single n-crossing diagram
  std::vector<int> orders;       // every census order that found the knot
};

struct SpectrumReport {
  int max_n = 0;
  std::vector<SpectrumRow> rows;        // table order
  std::vector<std::string> inconsistencies;
};

/// Least single-crossing order per table knot, from censuses of orders
/// 3..max_n.  A knot found at order n but not at 2n <= max_n contradicts
/// the order-doubling construction and is reported.
inline SpectrumReport spectrum_report(const InvariantTable& table, const std::vector<CensusResult>& censuses) {
  SpectrumReport rep;
  std::map<int, std::set<std::string>> found;
  for (const auto& c : censuses) {
    rep.max_n = std::max(rep.max_n, c.n);
    found[c.n] = c.names();
  }
  for (const auto& e : table.entries()) {
    SpectrumRow row{e.name, std::nullopt, {}};
    for (const auto& [n, names] : found)
      if (names.count(e.name)) row.orders.push_back(n);
    if (!row.orders.empty()) row.min_order = row.orders.front();
    for (int n : row.orders)
      if (found.count(2 * n) && !found[2 * n].count(e.name))
        rep.inconsistencies.push_back(e.name + " found at n=" + std::to_string(n) + " but not at n=" + std::to_string(2 * n));
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace mcknot
