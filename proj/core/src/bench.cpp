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

#include "covred/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include "covred/synthetic.hpp"
#include "json.hpp"

namespace covred {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

template <class F>
double time_ns(F&& f) {
  const auto start = Clock::now();
  f();
  return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

std::string compiler_id() {
#if defined(__clang__)
  return "clang " __clang_version__;
#elif defined(__GNUC__)
  return "gcc " __VERSION__;
#else
  return "unknown";
#endif
}

}  // namespace

bool single_cover_cells_agree(const DiscernibilityMatrix& matrix, const LegacyMatrix& legacy) {
  for (ObjectId i = 0; i < matrix.n(); ++i) {
    for (ObjectId j = 0; j < matrix.n(); ++j) {
      const LegacyCell& w = legacy.cell(i, j);
      if (!w.pairs.empty()) return false;
      if (w.singles != (matrix.cell(i, j) | matrix.cell(j, i))) return false;
    }
  }
  return true;
}

BenchReport run_bench(const BenchConfig& config) {
  if (config.n_values.empty() || config.m_values.empty())
    throw Error(ErrorCode::InvalidArgument, "bench needs at least one n and one m value");
  if (config.repetitions < kMinBenchRepetitions)
    throw Error(ErrorCode::InvalidArgument,
                "bench needs at least " + std::to_string(kMinBenchRepetitions) + " repetitions");

  BenchReport report;
  report.config = config;
  report.compiler = compiler_id();
  report.hardware_threads = std::thread::hardware_concurrency();

  std::uint64_t k = 0;
  for (std::size_t n : config.n_values) {
    for (std::size_t m : config.m_values) {
      BenchPoint p;
      p.n = n;
      p.m = m;
      p.instance_seed = config.seed + k++;
      const auto family = generate_family(
          {n, m, config.min_blocks, config.max_blocks, config.density, p.instance_seed});
      const auto g = granulate(family);

      BuildStats new_stats;
      BuildStats legacy_stats;
      const auto matrix = build_matrix(family, g.covers, {}, &new_stats);
      const auto legacy = build_legacy_matrix(family, g.covers, g.family, {}, &legacy_stats);
      p.new_ops = new_stats.total();
      p.legacy_ops = legacy_stats.total();
      if (m == 1) p.single_cover_cells_agree = single_cover_cells_agree(matrix, legacy);

      std::vector<double> new_times;
      std::vector<double> legacy_times;
      for (std::size_t r = 0; r < config.repetitions; ++r) {
        new_times.push_back(time_ns([&] {
          auto built = build_matrix(family, g.covers);
          if (built.n() != n) throw std::logic_error("bench: matrix size mismatch");
        }));
        legacy_times.push_back(time_ns([&] {
          auto built = build_legacy_matrix(family, g.covers, g.family);
          if (built.n() != n) throw std::logic_error("bench: matrix size mismatch");
        }));
      }
      // A zero reading would break the ratio; clamp to the clock's resolution.
      p.new_median_ns = std::max(1.0, median(std::move(new_times)));
      p.legacy_median_ns = std::max(1.0, median(std::move(legacy_times)));
      report.points.push_back(p);
    }
  }
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "n,m,method,median_ns,ops_count\n";
  for (const auto& p : report.points) {
    out << p.n << ',' << p.m << ",new," << static_cast<std::uint64_t>(p.new_median_ns) << ',' << p.new_ops << '\n';
    out << p.n << ',' << p.m << ",legacy," << static_cast<std::uint64_t>(p.legacy_median_ns) << ',' << p.legacy_ops
        << '\n';
  }
  return out.str();
}

std::string bench_json(const BenchReport& report) {
  using json = nlohmann::ordered_json;
  json points = json::array();
  for (const auto& p : report.points) {
    json point{{"n", p.n},
               {"m", p.m},
               {"instance_seed", p.instance_seed},
               {"new_median_ns", p.new_median_ns},
               {"legacy_median_ns", p.legacy_median_ns},
               {"ratio", p.ratio()},
               {"new_ops", p.new_ops},
               {"legacy_ops", p.legacy_ops}};
    if (p.single_cover_cells_agree) point["single_cover_cells_agree"] = *p.single_cover_cells_agree;
    points.push_back(std::move(point));
  }
  const auto& c = report.config;
  json doc;
  doc["metadata"] = json{{"seed", c.seed},
                         {"repetitions", c.repetitions},
                         {"generator", "mt19937_64"},
                         {"min_blocks", c.min_blocks},
                         {"max_blocks", c.max_blocks},
                         {"density", c.density},
                         {"compiler", report.compiler},
                         {"hardware_threads", report.hardware_threads}};
  doc["points"] = std::move(points);
  return doc.dump() + "\n";
}

}  // namespace covred
