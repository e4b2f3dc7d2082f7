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

// JSON encodings.  Diagrams:
//   {"free_loops": 0, "crossings": [{"order": 3, "type": [1, 3, 2]}],
//    "edges": [[[0, 0], [0, 1]], ...]}
// Polynomials (machine form): [[exponent, coefficient], ...] in descending
// exponent; coefficients outside int64 are decimal strings.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "mcknot/diagram.hpp"
#include "mcknot/laurent.hpp"

namespace mcknot {

using Json = nlohmann::json;

/// Raised for unreadable or malformed input files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json poly_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.machine_form()) {
    if (fits_int64(c)) out.push_back({e, static_cast<std::int64_t>(c)});
    else out.push_back({e, bigint_to_string(c)});
  }
  return out;
}

inline LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("polynomial must be an array of [exponent, coefficient]");
  std::vector<std::pair<int, BigInt>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw InputError("polynomial term must be [exponent, coefficient]");
    BigInt c;
    if (t[1].is_number_integer()) c = BigInt(t[1].get<std::int64_t>());
    else if (t[1].is_string()) c = BigInt(t[1].get<std::string>());
    else throw InputError("polynomial coefficient must be an integer or a decimal string");
    terms.emplace_back(t[0].get<int>(), c);
  }
  return LaurentPoly::from_terms(terms);
}

inline Json diagram_to_json(const MultiCrossingDiagram& d) {
  Json out;
  out["free_loops"] = d.free_loops;
  out["crossings"] = Json::array();
  for (const auto& t : d.crossings) out["crossings"].push_back({{"order", t.order()}, {"type", t.heights()}});
  out["edges"] = Json::array();
  for (const auto& [a, b] : d.edges) out["edges"].push_back({{a.crossing, a.spoke}, {b.crossing, b.spoke}});
  return out;
}

inline MultiCrossingDiagram diagram_from_json(const Json& j) {
  try {
    MultiCrossingDiagram d;
    d.free_loops = j.value("free_loops", 0);
    for (const auto& c : j.at("crossings")) {
      auto heights = c.at("type").get<std::vector<int>>();
      if (c.contains("order") && c.at("order").get<int>() != static_cast<int>(heights.size()))
        throw InputError("crossing order does not match its type");
      d.crossings.push_back(CrossingType::from_heights(std::move(heights)));
    }
    for (const auto& e : j.at("edges")) {
      auto end = [](const Json& p) { return Endpoint{p.at(0).get<int>(), p.at(1).get<int>()}; };
      d.edges.push_back({end(e.at(0)), end(e.at(1))});
    }
    return d;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed diagram: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed diagram: ") + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed: " + path);
}

struct NamedDiagram {
  std::string name;  // empty if the file carries no name
  MultiCrossingDiagram diagram;
};

inline NamedDiagram read_diagram_file(const std::string& path) {
  const Json j = read_json_file(path);
  NamedDiagram out;
  if (j.is_object() && j.contains("name") && j["name"].is_string()) out.name = j["name"].get<std::string>();
  out.diagram = diagram_from_json(j);
  return out;
}

}  // namespace mcknot
