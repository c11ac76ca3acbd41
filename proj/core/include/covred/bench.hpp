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

#ifndef COVRED_BENCH_HPP
#define COVRED_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covred/discernibility.hpp"

namespace covred {

struct BenchConfig {
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> m_values;
  std::size_t repetitions = 5;
  std::uint64_t seed = 1;
  std::size_t min_blocks = 4;
  std::size_t max_blocks = 12;
  double density = 0.5;
};

inline constexpr std::size_t kMinBenchRepetitions = 3;

struct BenchPoint {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t instance_seed = 0;
  double new_median_ns = 0;
  double legacy_median_ns = 0;
  /// Membership tests of the improved builder.
  std::uint64_t new_ops = 0;
  /// Inclusion tests plus pair checks of the legacy builder.
  std::uint64_t legacy_ops = 0;
  /// For m == 1 only: every legacy cell is pair-free and equals c_ij | c_ji.
  std::optional<bool> single_cover_cells_agree;

  double ratio() const { return legacy_median_ns / new_median_ns; }
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchPoint> points;
  std::string compiler;
  unsigned hardware_threads = 0;
};

/// Times build_matrix and build_legacy_matrix (single-threaded) on one
/// generated family per (n, m). The instance seed of the k-th point in
/// n-major order is seed + k. Throws InvalidArgument for empty value lists
/// or fewer than kMinBenchRepetitions repetitions.
BenchReport run_bench(const BenchConfig& config);

/// Columns n,m,method,median_ns,ops_count; one row per method and point.
std::string bench_csv(const BenchReport& report);
std::string bench_json(const BenchReport& report);

/// Legacy cells of a single-cover family, checked against c_ij | c_ji.
bool single_cover_cells_agree(const DiscernibilityMatrix& matrix, const LegacyMatrix& legacy);

}  // namespace covred

#endif  // COVRED_BENCH_HPP
