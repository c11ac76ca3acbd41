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

#include "covred/reduction.hpp"

#include "covred/synthetic.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace covred;

namespace {

ReductSet matrix_reducts(const CoverFamily& f) {
  const auto g = granulate(f);
  return all_reducts(build_matrix(f, g.covers));
}

ReductSet legacy_reducts(const CoverFamily& f) {
  const auto g = granulate(f);
  return all_reducts_legacy(build_legacy_matrix(f, g.covers, g.family));
}

CoverFamily trivial_family(std::size_t n, std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back("o" + std::to_string(x));
  Universe u(labels);
  std::vector<Cover> covers;
  for (std::size_t c = 0; c < m; ++c)
    covers.push_back(validate_cover(u, "T" + std::to_string(c), std::vector<ObjectSet>{u.full_set()}));
  return CoverFamily(u, std::move(covers));
}

}  // namespace

TEST_CASE("house reducts and core") {
  const auto f = fixtures::house();
  const auto r = matrix_reducts(f);
  REQUIRE(r.reducts.size() == 2);
  CHECK(f.names_of(r.reducts[0]) == std::vector<std::string>{"C3", "C4"});
  CHECK(f.names_of(r.reducts[1]) == std::vector<std::string>{"C1", "C2", "C3"});
  CHECK(f.names_of(r.core) == std::vector<std::string>{"C3"});
  CHECK_FALSE(r.degenerate);
  CHECK(legacy_reducts(f) == r);
  CHECK(brute_force_reducts(f) == r);
}

TEST_CASE("house preservation and indispensability") {
  const auto f = fixtures::house();
  CHECK(is_covering_preserving(f, f.subset_of({"C3", "C4"})));
  CHECK(is_covering_preserving(f, f.subset_of({"C1", "C2", "C3"})));
  CHECK_FALSE(is_covering_preserving(f, f.subset_of({"C1", "C2", "C4"})));
  CHECK(is_indispensable(f, f.require("C3")));
  CHECK_FALSE(is_indispensable(f, f.require("C1")));
  CHECK_FALSE(is_indispensable(f, f.require("C4")));
}

TEST_CASE("argument errors") {
  const auto f = fixtures::house();
  CHECK_THROWS_AS(is_covering_preserving(f, f.empty_subset()), Error);
  try {
    is_covering_preserving(f, f.empty_subset());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySubset);
  }
  const CoverFamily single(f.universe(), {f.cover(0)});
  try {
    is_indispensable(single, 0);
    FAIL("expected LastCover");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LastCover);
  }
  const auto wide = generate_family({3, kBruteForceMaxCovers + 1, 1, 2, 0.5, 1});
  try {
    brute_force_reducts(wide);
    FAIL("expected TooManyCovers");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyCovers);
  }
}

TEST_CASE("degenerate family has the empty reduct") {
  for (std::size_t m : {1U, 3U}) {
    const auto f = trivial_family(4, m);
    for (const auto& r : {matrix_reducts(f), legacy_reducts(f), brute_force_reducts(f)}) {
      REQUIRE(r.reducts.size() == 1);
      CHECK(r.reducts.front().none());
      CHECK(r.core.none());
      CHECK(r.degenerate);
    }
  }
}

TEST_CASE("matrix check agrees with preservation on every subset") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = fixtures::random_family(seed, 10, 6);
    const auto g = granulate(f);
    const auto matrix = build_matrix(f, g.covers);
    const auto plain = oracle::from(f);
    for (std::uint32_t mask = 1; mask < (1U << f.m()); ++mask) {
      CoverSet p(f.m());
      for (CoverId c = 0; c < f.m(); ++c)
        if ((mask >> c) & 1U) p.set(c);
      const bool preserving = is_covering_preserving(g, p);
      CHECK(preserving == oracle::preserves(plain, mask));
      CHECK(reduct_check(matrix, p) == preserving);
    }
  }
}

TEST_CASE("reducts match exhaustive search") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto f = fixtures::random_family(seed, 10, 7);
    const auto want = oracle::reducts(oracle::from(f));
    const auto r = matrix_reducts(f);
    CHECK(oracle::as_sets(r.reducts) == want);
    CHECK(r.reducts.size() == want.size());
    CHECK(brute_force_reducts(f) == r);
    CHECK(legacy_reducts(f) == r);
  }
}

TEST_CASE("reducts are minimal, preserving and canonical") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto f = fixtures::random_family(seed, 16, 8, 2);
    const auto g = granulate(f);
    const auto r = all_reducts(build_matrix(f, g.covers));
    auto sorted = r.reducts;
    canonical_sort(sorted);
    CHECK(sorted == r.reducts);
    for (const auto& p : r.reducts) {
      if (p.none()) continue;
      CHECK(is_covering_preserving(g, p));
      p.for_each([&](std::size_t c) {
        auto smaller = p;
        smaller.reset(c);
        if (smaller.any()) CHECK_FALSE(is_covering_preserving(g, smaller));
      });
      for (const auto& q : r.reducts)
        if (q != p) CHECK_FALSE(q.is_subset_of(p));
    }
  }
}

TEST_CASE("core three ways") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = fixtures::random_family(seed, 12, 6);
    if (f.m() < 2) continue;
    const auto g = granulate(f);
    const auto matrix = build_matrix(f, g.covers);
    const auto r = all_reducts(matrix);
    CoverSet indispensable(f.m());
    for (CoverId c = 0; c < f.m(); ++c)
      if (is_indispensable(g, c)) indispensable.set(c);
    CHECK(core_from_matrix(matrix) == indispensable);
    CHECK(intersect_all(r.reducts, f.m()) == indispensable);
    CHECK(r.core == indispensable);
  }
}

TEST_CASE("discernibility function prime implicants are the reducts") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto f = fixtures::random_family(seed, 10, 6, 2);
    const auto g = granulate(f);
    const auto matrix = build_matrix(f, g.covers);
    const auto fn = DiscernFunction::from_matrix(matrix);
    auto primes = fn.prime_implicants();
    canonical_sort(primes);
    const auto r = all_reducts(matrix);
    if (!r.degenerate) CHECK(primes == r.reducts);
    for (const auto& p : r.reducts) CHECK(fn.satisfied_by(p));
  }
}

TEST_CASE("lower triangle suffices for partitions") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto f = fixtures::random_partitions(seed, 8, 4);
    const auto g = granulate(f);
    const auto matrix = build_matrix(f, g.covers);
    CHECK(DiscernFunction::from_lower_triangle(matrix).clauses() == DiscernFunction::from_matrix(matrix).clauses());
  }
}

TEST_CASE("intersect_all of nothing is empty") { CHECK(intersect_all({}, 3).none()); }

TEST_CASE("method names") {
  CHECK(to_string(ReductMethod::Matrix) == "matrix");
  CHECK(to_string(ReductMethod::Legacy) == "legacy");
  CHECK(to_string(ReductMethod::Brute) == "brute");
}

TEST_CASE("two identical covers are interchangeable") {
  const auto f = fixtures::house();
  const auto twin = validate_cover(f.universe(), "C2", f.cover(0).blocks());
  const CoverFamily doubled(f.universe(), {f.cover(0), twin});
  for (const auto& r : {matrix_reducts(doubled), legacy_reducts(doubled), brute_force_reducts(doubled)}) {
    REQUIRE(r.reducts.size() == 2);
    CHECK(doubled.names_of(r.reducts[0]) == std::vector<std::string>{"C1"});
    CHECK(doubled.names_of(r.reducts[1]) == std::vector<std::string>{"C2"});
    CHECK(r.core.none());
  }
}

TEST_CASE("house subset of C1 and C2 does not preserve") {
  const auto f = fixtures::house();
  CHECK_FALSE(is_covering_preserving(f, f.subset_of({"C1", "C2"})));
  CHECK_FALSE(is_covering_preserving(f, f.subset_of({"C3"})));
  const auto g = granulate(f);
  CHECK_FALSE(reduct_check(build_matrix(f, g.covers), f.subset_of({"C3"})));
}
