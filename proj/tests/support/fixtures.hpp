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

#ifndef COVRED_TESTS_FIXTURES_HPP
#define COVRED_TESTS_FIXTURES_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "covred/covred.hpp"

namespace fixtures {

inline std::filesystem::path dir() { return COVRED_FIXTURE_DIR; }

inline std::filesystem::path house_path() { return dir() / "house_evaluation.json"; }

/// The nine-house, four-cover evaluation example.
inline covred::CoverFamily house() { return covred::load_cover_file(house_path()); }

inline covred::Universe nine() { return covred::Universe({"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"}); }

/// Object set from 1-based labels x1..x9, e.g. set({1, 2}) = {x1, x2}.
inline covred::ObjectSet xs(std::size_t n, std::initializer_list<std::size_t> one_based) {
  covred::ObjectSet s(n);
  for (auto k : one_based) s.set(k - 1);
  return s;
}

/// Random family drawn with per-seed varied shape parameters, so property
/// tests see sparse and dense covers, partitions-like and overlapping ones.
inline covred::CoverFamily random_family(std::uint64_t seed, std::size_t max_n, std::size_t max_m,
                                         std::size_t min_n = 1) {
  covred::Rng rng(seed * 0x9e3779b97f4a7c15ULL + 17);
  covred::SyntheticSpec spec;
  spec.n = rng.between(min_n, max_n);
  spec.m = rng.between(1, max_m);
  spec.min_blocks = 1;
  spec.max_blocks = rng.between(1, 5);
  spec.density = 0.15 + 0.7 * rng.unit();
  spec.seed = rng.next();
  return covred::generate_family(spec);
}

/// Random family of partitions: each cover assigns every object to one of
/// k labels.
inline covred::CoverFamily random_partitions(std::uint64_t seed, std::size_t max_n, std::size_t max_m) {
  covred::Rng rng(seed + 99);
  const std::size_t n = rng.between(1, max_n);
  const std::size_t m = rng.between(1, max_m);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back("o" + std::to_string(x));
  covred::Universe u(labels);
  std::vector<covred::Cover> covers;
  for (std::size_t c = 0; c < m; ++c) {
    const std::size_t k = rng.between(1, 3);
    std::vector<covred::ObjectSet> blocks(k, covred::ObjectSet(n));
    for (std::size_t x = 0; x < n; ++x) blocks[rng.below(k)].set(x);
    std::vector<covred::ObjectSet> nonempty;
    for (auto& b : blocks)
      if (b.any()) nonempty.push_back(b);
    covers.push_back(covred::validate_cover(u, "P" + std::to_string(c), nonempty));
  }
  return covred::CoverFamily(u, std::move(covers));
}

}  // namespace fixtures

#endif  // COVRED_TESTS_FIXTURES_HPP
