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

#include "mcknot/split.hpp"

using mcknot::Split;

TEST_CASE("catalan counts", "[split]") {
  const std::uint64_t expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 0; n <= 10; ++n) CHECK(mcknot::catalan(n) == expect[n]);
  for (int n = 1; n <= 7; ++n) CHECK(mcknot::enumerate_splits(n).size() == mcknot::catalan(n));
}

TEST_CASE("enumerated splits are distinct and noncrossing", "[split]") {
  const auto all = mcknot::enumerate_splits(5);
  std::set<std::string> seen;
  for (const auto& s : all) {
    std::vector<int> partner(s.partners().begin(), s.partners().end());
    CHECK(Split::from_partner(partner) == s);
    seen.insert(s.to_string());
  }
  CHECK(seen.size() == all.size());
}

TEST_CASE("parse and validation", "[split]") {
  const auto s = Split::parse("(0,5)(1,2)(3,4)");
  CHECK(s.order() == 3);
  CHECK(s.partner(0) == 5);
  CHECK(s.to_string() == "(0,5)(1,2)(3,4)");
  CHECK(Split::parse("(1,2),(3,0)") == Split::parse("(0,3)(1,2)"));
  CHECK_THROWS_AS(Split::parse("(0,2)(1,3)"), std::invalid_argument);
  CHECK_THROWS_AS(Split::parse("(0,1)(1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(Split::parse("(0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Split::parse("(0,4)(1,2)"), std::invalid_argument);
}

TEST_CASE("rotation", "[split]") {
  const auto s = Split::parse("(0,1)(2,3)(4,5)");
  CHECK(s.rotated(1) == Split::parse("(0,5)(1,2)(3,4)"));
  CHECK(s.rotated(2) == s);
  CHECK(s.rotated(-1) == s.rotated(5));
}

TEST_CASE("split moves", "[split]") {
  const auto s = Split::parse("(0,1)(2,3)");
  CHECK(mcknot::split_move(s, 0, 1) == Split::parse("(0,3)(1,2)"));
  // Arcs (0,1) and (4,5) of the parallel split are not adjacent across (2,3).
  const auto par = Split::parse("(0,1)(2,3)(4,5)");
  CHECK(mcknot::split_move(par, 0, 2) == Split::parse("(0,5)(1,4)(2,3)"));
  CHECK_THROWS_AS(mcknot::split_move(Split::parse("(0,5)(1,4)(2,3)"), 0, 2), std::invalid_argument);
  CHECK(mcknot::split_neighbors(s).size() == 1);
  for (const auto& u : mcknot::enumerate_splits(4))
    for (const auto& v : mcknot::split_neighbors(u)) CHECK(mcknot::split_distance(u, v) == 1);
}

TEST_CASE("closure counts", "[split]") {
  const auto par = Split::parse("(0,1)(2,3)(4,5)");
  CHECK(mcknot::closure_count(par, par) == 3);
  CHECK(mcknot::closure_count(par, par.rotated(1)) == 1);
  CHECK(mcknot::closure_count(Split::parse("(0,1)(2,3)"), Split::parse("(0,3)(1,2)")) == 1);
}

TEST_CASE("distance is n minus closure count for small n", "[split]") {
  for (int n = 1; n <= 4; ++n) {
    mcknot::SplitGraph g(n);
    const auto& cat = g.catalog();
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = 0; j < cat.size(); ++j)
        REQUIRE(g.distance(static_cast<int>(i), static_cast<int>(j)) ==
                n - mcknot::closure_count(cat.at(static_cast<int>(i)), cat.at(static_cast<int>(j))));
  }
}

TEST_CASE("catalog indexing and bfs agree", "[split]") {
  const auto& cat = mcknot::SplitCatalog::of(5);
  CHECK(cat.size() == 42);
  mcknot::SplitGraph g(5);
  for (int i = 0; i < 42; i += 5) {
    CHECK(cat.index(cat.at(i)) == i);
    for (int j = 0; j < 42; j += 7) CHECK(g.distance(i, j) == mcknot::split_distance(cat.at(i), cat.at(j)));
  }
  CHECK_THROWS(mcknot::SplitCatalog::of(11));
}

TEST_CASE("overstrand intersections", "[split]") {
  const auto par = Split::parse("(0,1)(2,3)(4,5)");
  // The chord through gap 0 (between points 5 and 0) and gap 3 separates
  // {0,1,2} from {3,4,5}; only arc (2,3) crosses it.
  CHECK(mcknot::intersections(par, mcknot::OverstrandPos{0}) == 1);
  const auto two = Split::parse("(0,1)(2,3)");
  CHECK(mcknot::intersections(two, mcknot::OverstrandPos{0}) == 0);
  CHECK(mcknot::intersections(two, mcknot::OverstrandPos{1}) == 2);
  CHECK(mcknot::common_intersections(two, mcknot::OverstrandPos{1}, mcknot::OverstrandPos{0}) == 0);
  CHECK(mcknot::OverstrandPos{4}.canonical(3) == mcknot::OverstrandPos{1});
}
