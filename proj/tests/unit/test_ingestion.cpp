/*
 * Copyright 2026 The covred Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "covred/ingestion.hpp"

#include <string>

#include "covred/formats.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace covred;
using fixtures::xs;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("house fixture parses") {
  const auto f = fixtures::house();
  CHECK(f.n() == 9);
  CHECK(f.m() == 4);
  CHECK(f.names_of(f.all_covers()) == std::vector<std::string>{"C1", "C2", "C3", "C4"});
  CHECK(f.cover(0).blocks().size() == 3);
}

TEST_CASE("a cover may omit a block as long as it still covers") {
  const std::string doc = R"({"universe": ["x1","x2","x3","x4","x5","x6","x7","x8","x9"],
    "covers": [{"name": "C1", "blocks": [["x1","x2","x4","x5","x7","x8"], ["x2","x3","x5","x6","x8","x9"]]}]})";
  const auto f = parse_cover_file(doc);
  CHECK(f.cover(0).blocks().size() == 2);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] {
          parse_cover_file(R"({"universe": ["a"], "covers": [{"name": "C", "blocks": [["a", "x10"]]}]})");
        }) == ErrorCode::UnknownLabel);
  CHECK(code_of([] { parse_cover_file(R"({"universe": ["a", "b"], "covers": [{"name": "C", "blocks": [["a"]]}]})"); }) ==
        ErrorCode::NotACover);
  CHECK(message_of([] {
          parse_cover_file(R"({"universe": ["a", "b"], "covers": [{"name": "C7", "blocks": [["a"]]}]})");
        }).find("C7") != std::string::npos);
  CHECK(code_of([] { parse_cover_file("{\"universe\": [\"a\"],\n \"covers\": [}"); }) == ErrorCode::SyntaxError);
  const auto msg = message_of([] { parse_cover_file("{\"universe\": [\"a\"],\n \"covers\": [}"); });
  CHECK(msg.find("byte") != std::string::npos);
  CHECK(msg.find("line 2") != std::string::npos);
  CHECK(message_of([] { parse_cover_file(R"({"universe": ["a"], "covers": [{"blocks": []}]})"); }).find("/covers/0") !=
        std::string::npos);
  CHECK(code_of([] { parse_cover_file(R"({"universe": [], "covers": []})"); }) == ErrorCode::EmptyUniverse);
  CHECK(code_of([] { parse_cover_file(R"({"universe": ["a"], "covers": []})"); }) == ErrorCode::EmptyFamily);
  CHECK(code_of([] {
          parse_cover_file(
              R"({"universe": ["a"], "covers": [{"name": "C", "blocks": [["a"]]}, {"name": "C", "blocks": [["a"]]}]})");
        }) == ErrorCode::DuplicateCoverName);
  CHECK(code_of([] { load_cover_file("/nonexistent/file.json"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("serialization round trip") {
  const auto f = fixtures::house();
  const auto text = serialize_family(f);
  CHECK(text.back() == '\n');
  const auto again = parse_cover_file(text);
  CHECK(again == f);
  CHECK(serialize_family(again) == text);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = fixtures::random_family(seed, 12, 5);
    CHECK(parse_cover_file(serialize_family(r)) == r);
  }
}

TEST_CASE("canonical form lists members in universe order") {
  const auto f = parse_cover_file(R"({"universe": ["a", "b", "c"],
    "covers": [{"name": "P", "blocks": [["c", "a"], ["b"]]}]})");
  const auto text = serialize_family(f);
  CHECK(text.find("\"a\",\n") < text.find("\"c\""));
}

TEST_CASE("csv parsing") {
  const auto t = parse_csv("id,colour,\"size, cm\"\no1,red,1.5\no2,\"dark \"\"blue\"\"\",2\r\n");
  CHECK(t.attributes == std::vector<std::string>{"colour", "size, cm"});
  CHECK(t.objects == std::vector<std::string>{"o1", "o2"});
  CHECK(t.cells[1][0] == "dark \"blue\"");
  CHECK(t.cells[1][1] == "2");
  CHECK(code_of([] { parse_csv("id,a\no1,1,2\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_csv("id,a\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_csv(""); }) == ErrorCode::SyntaxError);
}

TEST_CASE("categorical column gives the equality partition") {
  const auto f = covers_from_table(parse_csv("id,a\no1,a\no2,a\no3,b\n"), {});
  REQUIRE(f.m() == 1);
  CHECK(f.cover(0).name() == "a");
  CHECK(f.cover(0).blocks() == std::vector<ObjectSet>{xs(3, {1, 2}), xs(3, {3})});
  CHECK(is_partition(f.cover(0)));
}

TEST_CASE("tolerance column") {
  const auto table = parse_csv("id,v\no1,1.0\no2,1.1\no3,5.0\n");
  TableDerivationConfig cfg;
  cfg.fallback = Tolerance{0.2, false};
  const auto f = covers_from_table(table, cfg);
  CHECK(f.cover(0).blocks() == std::vector<ObjectSet>{xs(3, {1, 2}), xs(3, {3})});

  cfg.fallback = Tolerance{0.0, false};
  const auto eq = covers_from_table(parse_csv("id,v\no1,2\no2,3\no3,2.0\n"), cfg);
  CHECK(eq.cover(0).blocks() == std::vector<ObjectSet>{xs(3, {1, 3}), xs(3, {2})});

  // 0.05 of the range 4.0 is 0.2.
  cfg.fallback = Tolerance{0.05, true};
  CHECK(covers_from_table(table, cfg).cover(0).blocks() == f.cover(0).blocks());
}

TEST_CASE("tolerance blocks are reflexive and overlapping") {
  const auto table = parse_csv("id,v\no1,0\no2,1\no3,2\no4,3\n");
  TableDerivationConfig cfg;
  cfg.fallback = Tolerance{1.0, false};
  const auto f = covers_from_table(table, cfg);
  CHECK(f.cover(0).blocks() == std::vector<ObjectSet>{xs(4, {1, 2}), xs(4, {1, 2, 3}), xs(4, {2, 3, 4}), xs(4, {3, 4})});
  CHECK_FALSE(is_partition(f.cover(0)));
}

TEST_CASE("interval bins") {
  const auto table = parse_csv("id,v\no1,-5\no2,1\no3,1.9\no4,2.5\no5,40\n");
  TableDerivationConfig cfg;
  cfg.fallback = IntervalBins{{0, 2, 4}, 0.0};
  CHECK(covers_from_table(table, cfg).cover(0).blocks() == std::vector<ObjectSet>{xs(5, {1, 2, 3}), xs(5, {4, 5})});
  // Widen each inner edge by a quarter of the bin width: [<2.5) and [>=1.5).
  cfg.fallback = IntervalBins{{0, 2, 4}, 0.25};
  CHECK(covers_from_table(table, cfg).cover(0).blocks() ==
        std::vector<ObjectSet>{xs(5, {1, 2, 3}), xs(5, {3, 4, 5})});

  Warnings warnings;
  cfg.fallback = IntervalBins{{0, 2, 3, 4}, 0.0};
  const auto f = covers_from_table(parse_csv("id,v\no1,1\no2,9\n"), cfg, &warnings);
  CHECK(f.cover(0).blocks().size() == 2);
  CHECK(warnings.size() == 1);
}

TEST_CASE("derivation errors") {
  TableDerivationConfig cfg;
  CHECK(code_of([&] { covers_from_table(parse_csv("id,a\no1,\no2,x\n"), cfg); }) == ErrorCode::MissingValue);
  cfg.fallback = Tolerance{0.1, false};
  CHECK(code_of([&] { covers_from_table(parse_csv("id,a\no1,1\no2,x\n"), cfg); }) ==
        ErrorCode::NonNumericUnderNumericStrategy);
  cfg.fallback = Tolerance{-1, false};
  CHECK(code_of([&] { cfg.validate(); }) == ErrorCode::InvalidConfig);
  cfg.fallback = IntervalBins{{1, 1}, 0};
  CHECK(code_of([&] { cfg.validate(); }) == ErrorCode::InvalidConfig);
  cfg.fallback = IntervalBins{{1, 2}, 1.0};
  CHECK(code_of([&] { cfg.validate(); }) == ErrorCode::InvalidConfig);
  cfg.fallback = IntervalBins{{1}, 0};
  CHECK(code_of([&] { cfg.validate(); }) == ErrorCode::InvalidConfig);
  TableDerivationConfig named;
  named.per_attribute["nope"] = Categorical{};
  CHECK(code_of([&] { covers_from_table(parse_csv("id,a\no1,1\n"), named); }) == ErrorCode::InvalidConfig);
}

TEST_CASE("derivation config from json") {
  const auto cfg = TableDerivationConfig::from_json(R"({"default": {"strategy": "tolerance", "epsilon": 0.5},
    "attributes": {"colour": {"strategy": "categorical"},
                   "size": {"strategy": "bins", "edges": [0, 1, 2], "overlap": 0.1}}})");
  CHECK(cfg.fallback == AttributeStrategy{Tolerance{0.5, false}});
  CHECK(cfg.strategy_for("colour") == AttributeStrategy{Categorical{}});
  CHECK(cfg.strategy_for("size") == AttributeStrategy{IntervalBins{{0, 1, 2}, 0.1}});
  CHECK(cfg.strategy_for("other") == cfg.fallback);
  CHECK(code_of([] { TableDerivationConfig::from_json(R"({"default": {"strategy": "fuzzy"}})"); }) ==
        ErrorCode::InvalidConfig);
  CHECK(code_of([] { TableDerivationConfig::from_json("{"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("derived covers validate and round trip") {
  const auto table = parse_csv("id,c,t,b\no1,x,1,0.1\no2,y,2,0.9\no3,x,2.2,1.5\no4,z,8,3\n");
  TableDerivationConfig cfg;
  cfg.per_attribute["t"] = Tolerance{0.5, false};
  cfg.per_attribute["b"] = IntervalBins{{0, 1, 2, 4}, 0.2};
  const auto f = covers_from_table(table, cfg);
  CHECK(f.m() == 3);
  CHECK(parse_cover_file(serialize_family(f)) == f);
}

TEST_CASE("json payload shapes") {
  const auto f = fixtures::house();
  const auto g = granulate(f);
  const auto matrix = build_matrix(f, g.covers);
  const auto mj = matrix_json(f, matrix);
  CHECK(mj.rfind("{\"method\":\"new\",\"objects\":[\"x1\"", 0) == 0);
  CHECK(mj.find("[[[],[],[\"C1\",\"C4\"],[\"C3\"]") != std::string::npos);
  CHECK(mj.back() == '\n');

  const auto lj = legacy_matrix_json(f, build_legacy_matrix(f, g.covers, g.family));
  CHECK(lj.rfind("{\"method\":\"legacy\"", 0) == 0);
  CHECK(lj.find("{\"singles\":[\"C3\"],\"pairs\":[]}") != std::string::npos);

  const auto rj = reducts_json(f, all_reducts(matrix), ReductMethod::Matrix);
  CHECK(rj == "{\"reducts\":[[\"C3\",\"C4\"],[\"C1\",\"C2\",\"C3\"]],\"core\":[\"C3\"],\"method\":\"matrix\","
              "\"degenerate\":false}\n");

  const auto gj = granules_json(f.universe(), g.covers[3]);
  CHECK(gj.rfind("{\"scope\":\"C4\",\"granules\":{\"x1\":[\"x1\",\"x2\",\"x4\",\"x5\"]", 0) == 0);
  CHECK(gj.find("\"x5\":[\"x5\"]") != std::string::npos);

  const auto aj = approximation_json(f.universe(), "C3", approximate(g.covers[2], xs(9, {1})));
  CHECK(aj == "{\"scope\":\"C3\",\"target\":[\"x1\"],\"lower\":[],\"upper\":[\"x1\",\"x2\",\"x3\"]}\n");

  CHECK(matrix_grid(f, matrix).find("C1,C4") != std::string::npos);
}
