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


#include <cstdio>
#include <filesystem>
#include <string>

#include <catch_amalgamated.hpp>

#include "mcknot/census.hpp"

using namespace mcknot;

namespace {

const std::string kFixtures = MCKNOT_FIXTURES_DIR;

const InvariantTable& table() {
  static const InvariantTable t = build_invariant_table(kFixtures);
  return t;
}

MultiCrossingDiagram fixture(const std::string& file) { return read_diagram_file(kFixtures + "/" + file).diagram; }

}  // namespace

TEST_CASE("candidate counts", "[census]") {
  CHECK(single_crossing_candidates(3) == 2 * 5);
  CHECK(single_crossing_candidates(5) == 1008);
  CHECK(single_crossing_candidates(7) == 720 * 429);
  CHECK_THROWS_AS(check_census_order(2), std::out_of_range);
  CHECK_THROWS_AS(check_census_order(8), std::out_of_range);
  for (const auto& d : single_crossing_diagrams(4)) CHECK(validate(d).components == 1);
}

TEST_CASE("petal diagrams", "[census]") {
  CHECK(petal_closure(3) == Split::parse("(0,1)(2,3)(4,5)"));
  const auto d = petal_diagram({1, 3, 5, 2, 4});
  CHECK(is_petal_closure(d));
  CHECK_FALSE(is_petal_closure(single_crossing_diagram(CrossingType::parse("12345"), petal_closure(5).rotated(1))));
  CHECK_THROWS(petal_diagram({1, 2, 3, 4}));
  // Petal number 5 belongs to the trefoil.
  const auto id = table().identify(jones(d));
  REQUIRE(id);
  CHECK(id->name == "3_1");
}

TEST_CASE("invariant table", "[census]") {
  CHECK(table().size() == 100);
  const auto tre = jones(fixture("3_1.json"));
  CHECK(table().identify(tre)->chirality == Chirality::same);
  CHECK(table().identify(tre.mirror())->chirality == Chirality::mirror);
  CHECK(table().identify(jones(fixture("4_1.json")))->chirality == Chirality::amphichiral);
  CHECK_FALSE(table().identify(tre * tre * tre * tre));
  CHECK(std::string(to_string(Chirality::mirror)) == "mirror");

  const auto round = InvariantTable::from_json(table().to_json());
  CHECK(round.size() == table().size());
  CHECK(round.identify(tre)->name == "3_1");
}

TEST_CASE("Jones collisions are rejected", "[census]") {
  InvariantTable t;
  t.add("8_9", jones(fixture("8_9.json")));
  try {
    t.add("4_1#4_1", jones(fixture("ambiguous/4_1__4_1.json")));
    FAIL("expected a collision");
  } catch (const TableCollision& e) {
    CHECK(e.first() == "8_9");
    CHECK(e.second() == "4_1#4_1");
  }
  CHECK_THROWS_AS(t.add("m8_9", jones(fixture("8_9.json")).mirror()), TableCollision);
}

TEST_CASE("small censuses", "[census]") {
  const auto c3 = census(3, table());
  CHECK(c3.names().empty());
  CHECK(c3.ok());
  const auto c4 = census(4, table());
  CHECK(c4.names() == std::set<std::string>{"3_1"});
  const auto c5 = census(5, table());
  CHECK(c5.candidates == 1008);
  CHECK(c5.names() == std::set<std::string>{"3_1", "4_1"});
  CHECK(c5.unknown_count() == 0);
  CHECK(c5.ok());
  CHECK(c5.bound_checks == c5.knots);
  for (const auto& e : c5.found) CHECK(jones_oracle(e.witness) == e.jones);
}

TEST_CASE("census is independent of worker count and checkpoint replay", "[census]") {
  const auto path = (std::filesystem::temp_directory_path() / "mcknot_census_test.ckpt").string();
  std::remove(path.c_str());
  const auto serial = census(5, table());
  CensusOptions opts;
  opts.workers = 3;
  opts.checkpoint = path;
  const auto first = census(5, table(), opts);
  const auto replay = census(5, table(), opts);
  for (const auto* r : {&first, &replay}) {
    CHECK(r->names() == serial.names());
    CHECK(r->knots == serial.knots);
    REQUIRE(r->found.size() == serial.found.size());
    for (std::size_t i = 0; i < serial.found.size(); ++i) {
      CHECK(r->found[i].witness == serial.found[i].witness);
      CHECK(r->found[i].diagrams == serial.found[i].diagrams);
    }
  }
  std::remove(path.c_str());
}

TEST_CASE("spectrum report", "[census]") {
  std::vector<CensusResult> cs{census(3, table()), census(4, table()), census(5, table())};
  const auto rep = spectrum_report(table(), cs);
  CHECK(rep.max_n == 5);
  CHECK(rep.inconsistencies.empty());
  for (const auto& row : rep.rows) {
    if (row.name == "3_1") CHECK(row.min_order == 4);
    if (row.name == "4_1") CHECK(row.min_order == 5);
    if (row.name == "5_1") CHECK_FALSE(row.min_order);
  }
  // A knot found at 3 but missing at 6 would be inconsistent.
  CensusResult fake3, fake6;
  fake3.n = 3;
  fake6.n = 6;
  CensusEntry e;
  e.name = "3_1";
  fake3.found.push_back(e);
  CHECK(spectrum_report(table(), {fake3, fake6}).inconsistencies.size() == 1);
}
