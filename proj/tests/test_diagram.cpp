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


#include <random>
#include <string>

#include <catch_amalgamated.hpp>

#include "mcknot/census.hpp"
#include "mcknot/diagram.hpp"
#include "mcknot/io.hpp"

using namespace mcknot;

namespace {

const std::string kFixtures = MCKNOT_FIXTURES_DIR;

MultiCrossingDiagram fixture(const std::string& file) { return read_diagram_file(kFixtures + "/" + file).diagram; }

LaurentPoly poly(const std::string& text) { return LaurentPoly::parse(text); }

}  // namespace

TEST_CASE("validation", "[diagram]") {
  const auto k = fixture("3_1.json");
  CHECK(validate(k).components == 1);
  CHECK(validate(k).projection_components == 1);
  CHECK(k.crossing_count() == 3);

  auto dangling = k;
  dangling.edges.pop_back();
  CHECK_THROWS_WITH(validate(dangling), Catch::Matchers::ContainsSubstring("dangling endpoint"));
  auto duplicate = k;
  duplicate.edges[0].second = duplicate.edges[1].first;
  CHECK_THROWS_WITH(validate(duplicate), Catch::Matchers::ContainsSubstring("duplicate endpoint"));
  auto range = k;
  range.edges[0].first.spoke = 9;
  CHECK_THROWS_WITH(validate(range), Catch::Matchers::ContainsSubstring("out of range"));
}

TEST_CASE("free loops", "[diagram]") {
  MultiCrossingDiagram d;
  d.free_loops = 1;
  CHECK(bracket(d) == LaurentPoly(BigInt(1)));
  d.free_loops = 3;
  CHECK(bracket(d) == delta_power(2));
  CHECK(bracket_oracle(d) == delta_power(2));
  CHECK(validate(d).components == 3);
}

TEST_CASE("trefoil bracket, writhe and Jones", "[diagram]") {
  const auto k = fixture("3_1.json");
  CHECK(bracket(k) == poly("-A^5 - A^-3 + A^-7"));
  CHECK(bracket_oracle(k) == bracket(k));
  CHECK(writhe(k) == 3);
  CHECK(writhe(k, Orientation{{true}}) == 3);
  CHECK(jones(k) == poly("A^-4 + A^-12 - A^-16"));
  CHECK(jones(mirror(k)) == jones(k).mirror());
}

TEST_CASE("figure eight", "[diagram]") {
  const auto k = fixture("4_1.json");
  CHECK(bracket(k).span() == 16);
  CHECK(bracket_oracle(k).span() == 16);
  CHECK(writhe(k) == 0);
  CHECK(jones(k) == poly("A^8 - A^4 + 1 - A^-4 + A^-8"));
}

TEST_CASE("every fixture matches its recorded Jones polynomial", "[diagram]") {
  const Json expected = read_json_file(kFixtures + "/expected_jones.json");
  std::size_t seen = 0;
  for (const auto& dir : {kFixtures, kFixtures + "/ambiguous"})
    for (const auto& [path, nd] : read_fixtures(dir)) {
      if (!expected.contains(nd.name)) continue;
      INFO(nd.name);
      const auto want = poly_from_json(expected.at(nd.name));
      CHECK(jones(nd.diagram) == want);
      CHECK(jones_oracle(nd.diagram) == want);
      ++seen;
    }
  CHECK(seen == expected.size());
}

TEST_CASE("skein and double-crossing paths agree on single crossings", "[diagram]") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& t : all_types(n))
      for (const auto& s : SplitCatalog::of(n).splits()) {
        const auto d = single_crossing_diagram(t, s);
        INFO(t.to_string() << " " << s.to_string());
        const auto b = bracket(d);
        CHECK(bracket_oracle(d, Wiring::bubble) == b);
        CHECK(bracket_oracle(d, Wiring::insertion) == b);
        CHECK(bracket(mirror(d)) == b.mirror());
      }
}

TEST_CASE("perturbation yields double crossings", "[diagram]") {
  const auto d = single_crossing_diagram(CrossingType::parse("13524"), petal_closure(5));
  const auto p = perturb(d);
  CHECK(p.crossing_count() == 10);
  for (const auto& t : p.crossings) CHECK(t.order() == 2);
  CHECK(validate(p).components == validate(d).components);
  CHECK(perturb(d, Wiring::insertion).crossing_count() == 10);
}

TEST_CASE("oracle refuses oversized diagrams", "[diagram]") {
  auto k = fixture("3_1.json");
  for (int i = 0; i < 9; ++i) k = connect_sum(k, 0, fixture("3_1.json"), 0);
  CHECK(k.crossing_count() == 30);
  CHECK_THROWS_AS(bracket_oracle(k), std::length_error);
}

TEST_CASE("connected sum multiplies Jones", "[diagram]") {
  const auto a = fixture("3_1.json");
  const auto b = fixture("4_1.json");
  const auto s = connect_sum(a, 2, b, 5);
  CHECK(validate(s).components == 1);
  CHECK(jones(s) == jones(a) * jones(b));
  MultiCrossingDiagram unknot;
  unknot.free_loops = 1;
  CHECK(connect_sum(unknot, 0, a, 0) == a);
  CHECK_THROWS(connect_sum(a, 99, b, 0));
}

TEST_CASE("extremal states and span bounds", "[diagram]") {
  const auto k = fixture("4_1.json");
  const auto e = extremal_states(k);
  CHECK(e.M == 8);
  CHECK(e.m == -8);
  CHECK(e.high_attains);
  CHECK(e.low_attains);
  const auto r = verify_span_bound(k);
  CHECK(r.ok());
  CHECK(r.span == 16);
  CHECK(r.width_sum == 8);
  REQUIRE(r.checks.size() == 3);
  CHECK(r.checks[2].name == "span <= 4 c_2");
  CHECK(r.checks[2].rhs == 16);
}

TEST_CASE("petal bound on a petal diagram", "[diagram]") {
  const auto d = petal_diagram({1, 3, 5, 2, 4});
  const auto r = verify_span_bound(d, 5);
  CHECK(r.ok());
  bool petal = false;
  for (const auto& c : r.checks) petal = petal || c.name.find("4p - 12") != std::string::npos;
  CHECK(petal);
  CHECK(check_split_components(d).ok());
}

TEST_CASE("order doubling preserves the knot", "[diagram]") {
  const auto k = fixture("multi/3_1_triple.json");
  REQUIRE(k.crossing_count() == 2);
  const auto target = jones(fixture("3_1.json"));
  CHECK(jones(k) == target);
  for (int base = 0; base < static_cast<int>(k.edges.size()); ++base) {
    const auto d = double_order(k, base);
    INFO("basepoint " << base);
    CHECK(d.crossing_count() == 2);
    CHECK(d.order(0) == 6);
    CHECK(d.order(1) == 6);
    CHECK(jones(d) == target);
  }
  const auto fig8 = fixture("4_1.json");
  const auto d4 = double_order(fig8, 0);
  CHECK(d4.order(0) == 4);
  CHECK(jones(d4) == jones(fig8));
  CHECK_THROWS(double_order(k, 99));
}

TEST_CASE("two-crossing diagrams", "[diagram]") {
  std::size_t diagrams = 0, knots = 0;
  for_each_two_crossing_diagram(3, [&](const MultiCrossingDiagram& d) {
    ++diagrams;
    if (validate(d).components == 1) ++knots;
    return true;
  });
  CHECK(diagrams == 2400);
  CHECK(knots == 576);

  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 20; ++i) {
    const auto d = random_two_crossing_diagram(4, a);
    CHECK(d == random_two_crossing_diagram(4, b));
    CHECK(d.crossing_count() == 2);
    CHECK(bracket(d) == bracket_oracle(d));
  }
}
