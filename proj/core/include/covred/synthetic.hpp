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

#ifndef COVRED_SYNTHETIC_HPP
#define COVRED_SYNTHETIC_HPP

#include <cstdint>
#include <random>

#include "covred/model.hpp"

namespace covred {

/// Seeded generator with a portable stream: std::mt19937_64 (whose output
/// sequence is fixed by the C++ standard) plus our own bounded-integer and
/// unit-interval mappings, so a seed yields the same values on every
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Parameters of a random cover family. Objects are labelled x1..xn and
/// covers C1..Cm.
struct SyntheticSpec {
  std::size_t n = 8;
  std::size_t m = 4;
  std::size_t min_blocks = 1;
  std::size_t max_blocks = 4;
  /// Probability that a block contains a given object, in (0, 1].
  double density = 0.5;
  std::uint64_t seed = 0;
};

/// Draws a family. Per cover: a block count uniform in [min_blocks,
/// max_blocks]; each block takes each object independently with
/// probability `density`; every uncovered object is then put into a
/// uniformly chosen block of that cover, and any block still empty gets one
/// uniformly chosen object. Duplicate blocks are dropped by validation.
/// Deterministic in the seed. Throws InvalidArgument for a bad spec.
CoverFamily generate_family(const SyntheticSpec& spec);

}  // namespace covred

#endif  // COVRED_SYNTHETIC_HPP
