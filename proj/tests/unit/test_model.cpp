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

#include "covred/model.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace covred;

namespace {

bool pairwise_disjoint(const Cover& c) {
  const auto& b = c.blocks();
  for (std::size_t p = 0; p < b.size(); ++p)
    for (std::size_t q = p + 1; q < b.size(); ++q)
      if (!oracle::intersect(oracle::to_set(b[p]), oracle::to_set(b[q])).empty()) return false;
  return true;
}

}  // namespace

TEST_CASE("universe rejects empty and duplicate labels") {
  CHECK_THROWS_AS(Universe({}), Error);
  try {
    Universe({"a", "b", "a"});
    FAIL("expected DuplicateLabel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateLabel);
  }
  const Universe u({"a", "b"});
  CHECK(u.index_of("b") == 1);
  CHECK_FALSE(u.index_of("c").has_value());
}

TEST_CASE("validate_cover accepts the house price cover") {
  const auto u = fixtures::nine();
  const auto c = validate_cover(u, "C1",
                                std::vector<std::vector<std::string>>{{"x1", "x2", "x4", "x5", "x7", "x8"},
                                                                      {"x2", "x5", "x8"},
                                                                      {"x2", "x3", "x5", "x6", "x8", "x9"}});
  CHECK(c.blocks().size() == 3);
  CHECK(c.name() == "C1");
}

TEST_CASE("validate_cover reports uncovered objects") {
  const auto u = fixtures::nine();
  try {
    validate_cover(u, "K", std::vector<std::vector<std::string>>{{"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"}});
    FAIL("expected NotACover");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACover);
    CHECK(e.details() == std::vector<std::string>{"x9"});
  }
}

TEST_CASE("validate_cover errors") {
  const auto u = fixtures::nine();
  SUBCASE("unknown label") {
    try {
      validate_cover(u, "K", std::vector<std::vector<std::string>>{{"x1", "x10"}});
      FAIL("expected UnknownLabel");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownLabel);
      CHECK(e.details() == std::vector<std::string>{"x10"});
    }
  }
  SUBCASE("empty block") {
    try {
      validate_cover(u, "K", std::vector<std::vector<std::string>>{u.labels(), {}});
      FAIL("expected EmptyBlock");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptyBlock);
    }
  }
}

TEST_CASE("the whole universe is a one-block cover") {
  const auto u = fixtures::nine();
  const auto c = validate_cover(u, "U", std::vector<std::vector<std::string>>{u.labels()});
  CHECK(c.blocks().size() == 1);
  CHECK(is_partition(c));
}

TEST_CASE("duplicate blocks are dropped with a warning, order kept") {
  const Universe u({"a", "b", "c"});
  Warnings w;
  const auto c = validate_cover(u, "K", std::vector<std::vector<std::string>>{{"b", "c"}, {"a"}, {"c", "b"}}, &w);
  REQUIRE(c.blocks().size() == 2);
  CHECK(c.blocks()[0] == ObjectSet(3, {1, 2}));
  CHECK(c.blocks()[1] == ObjectSet(3, {0}));
  CHECK(w.size() == 1);
}

TEST_CASE("is_partition on the house covers and a disjoint cover") {
  const auto f = fixtures::house();
  // Oracle: pairwise-disjointness over std::set blocks.
  CHECK_FALSE(pairwise_disjoint(f.cover(1)));
  CHECK_FALSE(pairwise_disjoint(f.cover(2)));
  CHECK_FALSE(is_partition(f.cover(1)));
  CHECK_FALSE(is_partition(f.cover(2)));

  const Universe u({"x1", "x2", "x3"});
  const auto p = validate_cover(u, "P", std::vector<std::vector<std::string>>{{"x1", "x2"}, {"x3"}});
  CHECK(is_partition(p));
}

TEST_CASE("is_partition agrees with pairwise disjointness on random covers") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = fixtures::random_family(seed, 10, 4);
    for (const auto& c : f.covers()) CHECK(is_partition(c) == pairwise_disjoint(c));
  }
}

TEST_CASE("validated covers are nonempty and cover the universe") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = fixtures::random_family(seed, 12, 5);
    for (const auto& c : f.covers()) {
      ObjectSet u(f.n());
      for (const auto& b : c.blocks()) {
        CHECK(b.any());
        u |= b;
      }
      CHECK(u == f.universe().full_set());
    }
  }
}

TEST_CASE("cover family invariants") {
  const Universe u({"a", "b"});
  const auto c = validate_cover(u, "C", std::vector<std::vector<std::string>>{{"a", "b"}});
  CHECK_THROWS_AS(CoverFamily(u, {}), Error);
  try {
    CoverFamily(u, {c, c});
    FAIL("expected DuplicateCoverName");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateCoverName);
  }
  const Universe other({"a", "b", "c"});
  CHECK_THROWS_AS(CoverFamily(other, {c}), Error);

  const auto f = fixtures::house();
  CHECK(f.n() == 9);
  CHECK(f.m() == 4);
  CHECK(f.require("C3") == 2);
  CHECK_THROWS_AS(f.require("C9"), Error);
  CHECK(f.names_of(f.subset_of({"C4", "C1"})) == std::vector<std::string>{"C1", "C4"});
}
