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
#include <fstream>
#include <string>

#include <catch_amalgamated.hpp>

#include "mcknot/diagram.hpp"
#include "mcknot/io.hpp"
#include "mcknot/parallel.hpp"
#include "mcknot/report.hpp"

using namespace mcknot;

namespace {

std::string temp_file(const std::string& name) {
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  std::remove(path.c_str());
  return path;
}

}  // namespace

TEST_CASE("polynomial json", "[io]") {
  const auto p = LaurentPoly::parse("-A^5 - A^-3 + A^-7");
  CHECK(poly_to_json(p).dump() == "[[5,-1],[-3,-1],[-7,1]]");
  CHECK(poly_from_json(poly_to_json(p)) == p);
  auto big = delta_power(80);
  const Json j = poly_to_json(big);
  CHECK(j.dump().find('"') != std::string::npos);
  CHECK(poly_from_json(j) == big);
  CHECK_THROWS_AS(poly_from_json(Json::parse("[[1]]")), InputError);
  CHECK_THROWS_AS(poly_from_json(Json::parse("[[1, 2.5]]")), InputError);
  CHECK_THROWS_AS(poly_from_json(Json::parse("{}")), InputError);
}

TEST_CASE("diagram json", "[io]") {
  const auto d = single_crossing_diagram(CrossingType::parse("13524"), Split::parse("(0,9)(1,2)(3,8)(4,7)(5,6)"));
  const auto j = diagram_to_json(d);
  CHECK(j["crossings"][0]["order"] == 5);
  CHECK(diagram_from_json(j) == d);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"crossings":[{"order":3,"type":[1,2]}],"edges":[]})")), InputError);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"crossings":[{"type":[2,1]}],"edges":[]})")), InputError);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"edges":[]})")), InputError);
}

TEST_CASE("files", "[io]") {
  const auto path = temp_file("mcknot_io_test.json");
  CHECK_THROWS_AS(read_json_file(path), InputError);
  write_text_file(path, R"({"name":"3_1","free_loops":0,"crossings":[],"edges":[]})");
  const auto nd = read_diagram_file(path);
  CHECK(nd.name == "3_1");
  write_text_file(path, "{not json");
  CHECK_THROWS_AS(read_json_file(path), InputError);
  std::remove(path.c_str());
}

TEST_CASE("report serialization", "[report]") {
  Report r;
  r.command = "skein gen --type 123";
  r.results = {{"width", 4}, {"type", "123"}, {"histogram", {{"1", 2}, {"-1", 2}}}};
  const auto text = emit(r, Format::text);
  CHECK(text == "command: skein gen --type 123\nversion: 1.0.0\nhistogram: {\"-1\":2,\"1\":2}\ntype: 123\nwidth: 4\n"
                "discrepancies: none\n");
  const auto machine = emit(r, Format::machine);
  CHECK(parse_report(machine) == r);
  CHECK(emit(r, Format::machine) == machine);

  r.discrepancies.push_back("width exceeds floor(n^2/2)");
  r.seconds = 1.5;
  CHECK_FALSE(r.ok());
  CHECK(parse_report(emit(r, Format::machine)) == r);
  CHECK(emit(r, Format::text).find("  - width exceeds floor(n^2/2)\nseconds: 1.5\n") != std::string::npos);
}

TEST_CASE("parallel map keeps index order", "[parallel]") {
  for (unsigned workers : {1u, 2u, 5u}) {
    const auto out = parallel_map(100, workers, [](std::size_t i) { return i * i; });
    REQUIRE(out.size() == 100);
    for (std::size_t i = 0; i < 100; ++i) CHECK(out[i] == i * i);
  }
  CHECK(parallel_map(0, 4, [](std::size_t i) { return i; }).empty());
  CHECK_THROWS_AS(parallel_map(10, 3,
                               [](std::size_t i) {
                                 if (i == 7) throw std::runtime_error("shard 7");
                                 return i;
                               }),
                  std::runtime_error);
}

TEST_CASE("checkpoint replay", "[parallel]") {
  const auto path = temp_file("mcknot_checkpoint_test.jsonl");
  auto encode = [](int v) { return Json(v); };
  auto decode = [](const Json& j) { return j.get<int>(); };
  int calls = 0;
  {
    Checkpoint cp(path, "k");
    const auto out = checkpointed_map(4, 1, cp, [&](std::size_t i) { ++calls; return static_cast<int>(i) * 10; }, encode, decode);
    CHECK(out == std::vector<int>{0, 10, 20, 30});
  }
  CHECK(calls == 4);
  {
    std::ofstream torn(path, std::ios::app);
    torn << R"({"key":"k","shard":)";
  }
  Checkpoint again(path, "k");
  CHECK(again.completed() == 4);
  const auto out = checkpointed_map(4, 2, again, [&](std::size_t) { ++calls; return -1; }, encode, decode);
  CHECK(out == std::vector<int>{0, 10, 20, 30});
  CHECK(calls == 4);
  {
    // Records after a torn line start on a fresh line.
    Checkpoint more(path, "k2");
    more.record(0, Json(5));
  }
  CHECK(Checkpoint(path, "k2").completed() == 1);
  CHECK(Checkpoint(path, "k").completed() == 4);
  CHECK(Checkpoint(path, "other").completed() == 0);
  CHECK_FALSE(Checkpoint().enabled());
  std::remove(path.c_str());
}
