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


#include <catch_amalgamated.hpp>

#include "mcknot/skein.hpp"

using mcknot::CrossingType;
using mcknot::Split;

TEST_CASE("crossing type parsing", "[skein]") {
  CHECK(CrossingType::parse("13524").heights() == std::vector<int>{1, 3, 5, 2, 4});
  CHECK(CrossingType::parse("1,3,2") == CrossingType::parse("132"));
  CHECK(CrossingType::standard(4).to_string() == "1234");
  CHECK(CrossingType::parse("13524").reflected().to_string() == "14253");
  CHECK_THROWS_AS(CrossingType::parse("2134"), std::invalid_argument);
  CHECK_THROWS_AS(CrossingType::parse("1224"), std::invalid_argument);
  CHECK_THROWS_AS(CrossingType::parse("1a3"), std::invalid_argument);
}

TEST_CASE("type counts", "[skein]") {
  CHECK(mcknot::all_types(2).size() == 1);
  CHECK(mcknot::all_types(5).size() == 24);
  CHECK(mcknot::all_types(7).size() == 720);
  CHECK_THROWS(mcknot::all_types(9));
}

TEST_CASE("top-strand removal inverts overstrand addition", "[skein]") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& t : mcknot::all_types(n)) {
      const auto r = mcknot::remove_top(t);
      CHECK(r.parent.order() == n - 1);
      CHECK(mcknot::add_overstrand(r.parent, r.insertion) == t);
    }
}

TEST_CASE("double crossing relation", "[skein]") {
  const auto r = mcknot::build_relation(CrossingType::parse("12"));
  REQUIRE(r->size() == 2);
  CHECK(r->term(0).split == Split::parse("(0,1)(2,3)"));
  CHECK(r->term(0).power == 1);
  CHECK(r->term(1).split == Split::parse("(0,3)(1,2)"));
  CHECK(r->term(1).power == -1);
  CHECK(r->width() == 2);
}

TEST_CASE("triple crossing relation 123", "[skein]") {
  const auto r = mcknot::build_relation(CrossingType::parse("123"));
  const std::vector<mcknot::SkeinTerm> expect{
      {Split::parse("(0,1)(2,3)(4,5)"), -1, 1}, {Split::parse("(0,1)(2,5)(3,4)"), 1, 1},
      {Split::parse("(0,3)(1,2)(4,5)"), 1, 1},  {Split::parse("(0,5)(1,2)(3,4)"), -1, 1},
      {Split::parse("(0,5)(1,4)(2,3)"), -3, 1}};
  CHECK(r->terms() == expect);
  CHECK(r->width() == 4);
  CHECK(mcknot::build_relation(CrossingType::parse("132"))->high() == 3);
}

TEST_CASE("five crossing relation 12345", "[skein]") {
  const auto r = mcknot::build_relation(CrossingType::parse("12345"));
  CHECK(r->width() == 12);
  CHECK(r->high() == 2);
  CHECK(r->low() == -10);
  CHECK(r->support_size() == 42);
  const std::map<int, std::uint64_t> hist{{2, 5}, {0, 12}, {-2, 16}, {-4, 14}, {-6, 9}, {-8, 4}, {-10, 1}};
  CHECK(r->power_histogram() == hist);
}

TEST_CASE("standard type attains floor(n^2/2)", "[skein]") {
  for (int n = 2; n <= 7; ++n) CHECK(mcknot::build_relation(CrossingType::standard(n))->width() == n * n / 2);
}

TEST_CASE("realized widths", "[skein]") {
  CHECK(mcknot::realized_widths(3) == std::map<int, int>{{4, 2}});
  CHECK(mcknot::realized_widths(4) == std::map<int, int>{{8, 6}});
  CHECK(mcknot::realized_widths(5) == std::map<int, int>{{8, 2}, {12, 22}});
  CHECK(mcknot::realized_widths(6) == std::map<int, int>{{14, 6}, {16, 24}, {18, 90}});
}

TEST_CASE("reflection flips and negates the relation", "[skein]") {
  for (const auto& t : mcknot::all_types(5)) {
    const auto r = mcknot::build_relation(t);
    const auto m = mcknot::build_relation(t.reflected());
    CHECK(r->width() == m->width());
    CHECK(r->high() == -m->low());
  }
}

TEST_CASE("offspring classification", "[skein]") {
  CHECK(mcknot::classify_offspring(Split::parse("(0,3)(1,2)(4,5)"), 0) == mcknot::Turn::straight);
  CHECK(mcknot::classify_offspring(Split::parse("(0,1)(2,5)(3,4)"), 0) == mcknot::Turn::counterclockwise);
  CHECK(mcknot::classify_offspring(Split::parse("(0,5)(1,4)(2,3)"), 0) == mcknot::Turn::clockwise);
  CHECK(mcknot::classify_offspring(Split::parse("(0,1)(2,3)(4,5)"), 0) == mcknot::Turn::neither);
  CHECK(std::string(mcknot::to_string(mcknot::Turn::neither)) == "neither");
  CHECK_THROWS(mcknot::classify_offspring(Split::parse("(0,1)(2,3)"), 4));
}

TEST_CASE("high and low terms of 12345 are disjoint", "[skein]") {
  const auto r = mcknot::build_relation(CrossingType::parse("12345"));
  const auto hl = mcknot::high_low_terms(*r);
  CHECK_FALSE(hl.high.empty());
  CHECK_FALSE(hl.low.empty());
  for (int h : hl.high)
    for (int l : hl.low) CHECK(h != l);
}
