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

// Command reports and their text / machine (JSON) serializations.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcknot/io.hpp"

namespace mcknot {

inline constexpr const char* kVersion = "1.0.0";

struct Report {
  std::string command;
  std::string version = kVersion;
  Json results = Json::object();
  std::vector<std::string> discrepancies;
  std::optional<double> seconds;  // only emitted in verbose runs

  bool ok() const { return discrepancies.empty(); }

  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { text, machine };

namespace detail {

inline bool is_scalar(const Json& j) { return !j.is_structured(); }

inline std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        os << pad << key << ": " << scalar_text(value) << '\n';
      } else if (value.dump().size() + key.size() + static_cast<std::size_t>(indent) <= 100) {
        os << pad << key << ": " << value.dump() << '\n';
      } else {
        os << pad << key << ":\n";
        render(os, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (is_scalar(value) || value.dump().size() + static_cast<std::size_t>(indent) <= 98) {
        os << pad << "- " << (is_scalar(value) ? scalar_text(value) : value.dump()) << '\n';
      } else {
        os << pad << "-\n";
        render(os, value, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

}  // namespace detail

inline Json report_to_json(const Report& r) {
  Json j{{"command", r.command}, {"version", r.version}, {"results", r.results}, {"discrepancies", r.discrepancies}};
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

inline Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.results = j.at("results");
  r.discrepancies = j.at("discrepancies").get<std::vector<std::string>>();
  if (j.contains("seconds")) r.seconds = j["seconds"].get<double>();
  return r;
}

/// Deterministic serialization; object keys are emitted sorted.
inline std::string emit(const Report& r, Format format) {
  if (format == Format::machine) return report_to_json(r).dump() + "\n";
  std::ostringstream os;
  os << "command: " << r.command << '\n' << "version: " << r.version << '\n';
  detail::render(os, r.results, 0);
  if (r.discrepancies.empty()) {
    os << "discrepancies: none\n";
  } else {
    os << "discrepancies:\n";
    for (const auto& d : r.discrepancies) os << "  - " << d << '\n';
  }
  if (r.seconds) os << "seconds: " << *r.seconds << '\n';
  return os.str();
}

inline Report parse_report(const std::string& machine) { return report_from_json(Json::parse(machine)); }

}  // namespace mcknot
