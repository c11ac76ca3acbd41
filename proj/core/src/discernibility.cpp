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

#include "covred/discernibility.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "parallel.hpp"

namespace covred {

bool DiscernibilityMatrix::cell_empty(ObjectId i, ObjectId j) const {
  auto w = cell_words(i, j);
  return std::all_of(w.begin(), w.end(), [](CoverSet::Word x) { return x == 0; });
}

std::vector<CoverSet> DiscernibilityMatrix::unique_cells() const {
  std::vector<CoverSet> cells;
  for (ObjectId i = 0; i < n_; ++i)
    for (ObjectId j = 0; j < n_; ++j)
      if (!cell_empty(i, j)) cells.push_back(cell(i, j));
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::sort(cells.begin(), cells.end(), index_lex_less<CoverTag>);
  return cells;
}

DiscernibilityMatrix build_matrix(const CoverFamily& family, std::span<const NeighborhoodMap> maps,
                                  const BuildOptions& options, BuildStats* stats) {
  assert(maps.size() == family.m());
  const std::size_t n = family.n();
  const std::size_t m = family.m();
  DiscernibilityMatrix matrix(n, m);
  std::vector<std::uint64_t> tests(std::max(1U, options.threads), 0);

  // Rows are disjoint slices of the flat storage, so workers never share words.
  detail::parallel_slices(n, options.threads, [&](std::size_t worker, std::size_t begin, std::size_t end) {
    std::uint64_t local = 0;
    for (ObjectId i = begin; i < end; ++i) {
      for (CoverId c = 0; c < m; ++c) {
        const ObjectSet& g = maps[c].granule(i);
        for (ObjectId j = 0; j < n; ++j) {
          if (j == i) continue;
          ++local;
          if (!g.test(j)) matrix.add(i, j, c);
        }
      }
    }
    tests[worker] = local;
  });

  if (stats) stats->membership_tests += std::accumulate(tests.begin(), tests.end(), std::uint64_t{0});
  return matrix;
}

LegacyMatrix build_legacy_matrix(const CoverFamily& family, std::span<const NeighborhoodMap> maps,
                                 const NeighborhoodMap& fmap, const BuildOptions& options, BuildStats* stats) {
  assert(maps.size() == family.m());
  const std::size_t n = family.n();
  const std::size_t m = family.m();
  LegacyMatrix matrix(n, m);
  const std::size_t workers = std::max(1U, options.threads);
  std::vector<BuildStats> local_stats(workers);

  detail::parallel_slices(n, options.threads, [&](std::size_t worker, std::size_t begin, std::size_t end) {
    BuildStats& st = local_stats[worker];
    // Per-cover inclusion flags for the current (i, j).
    std::vector<char> inside(m);   // C(x_i) subset of C(x_j)
    std::vector<char> outside(m);  // C(x_j) subset of C(x_i)
    for (ObjectId i = begin; i < end; ++i) {
      for (ObjectId j = 0; j < n; ++j) {
        if (i == j) continue;
        const ObjectSet& fi = fmap.granule(i);
        const ObjectSet& fj = fmap.granule(j);
        const bool fi_in_fj = fi.is_subset_of(fj);
        const bool fj_in_fi = fj.is_subset_of(fi);
        st.inclusion_tests += 2;
        if (fi_in_fj && fj_in_fi) continue;

        for (CoverId c = 0; c < m; ++c) {
          const ObjectSet& gi = maps[c].granule(i);
          const ObjectSet& gj = maps[c].granule(j);
          inside[c] = gi.is_subset_of(gj);
          outside[c] = gj.is_subset_of(gi);
        }
        st.inclusion_tests += 2 * m;

        LegacyCell& cell = matrix.cell(i, j);
        if (fi_in_fj) {
          for (CoverId c = 0; c < m; ++c)
            if (inside[c] && !outside[c]) cell.singles.set(c);
        } else if (fj_in_fi) {
          for (CoverId c = 0; c < m; ++c)
            if (outside[c] && !inside[c]) cell.singles.set(c);
        } else {
          for (CoverId c = 0; c < m; ++c)
            if (!inside[c] && !outside[c]) cell.singles.set(c);
          for (CoverId s = 0; s < m; ++s) {
            for (CoverId t = 0; t < m; ++t) {
              if (s == t) continue;
              ++st.pair_checks;
              const bool s_strictly_in = inside[s] && !outside[s];
              const bool t_strictly_out = outside[t] && !inside[t];
              if (s_strictly_in && t_strictly_out) cell.pairs.emplace_back(s, t);
            }
          }
        }
      }
    }
  });

  if (stats) {
    for (const auto& st : local_stats) {
      stats->inclusion_tests += st.inclusion_tests;
      stats->pair_checks += st.pair_checks;
    }
  }
  return matrix;
}

std::size_t MatrixLawReport::count(MatrixLaw law) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [law](const LawViolation& v) { return v.law == law; }));
}

MatrixLawReport check_matrix_laws(const DiscernibilityMatrix& matrix, std::span<const NeighborhoodMap> maps) {
  assert(maps.size() == matrix.m());
  const std::size_t n = matrix.n();
  const std::size_t m = matrix.m();
  MatrixLawReport report;

  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      for (CoverId c = 0; c < m; ++c) {
        ++report.checks;
        const bool in_cell = matrix.cell_contains(i, j, c);
        const bool distinguishes = !maps[c].granule(i).test(j);
        if (in_cell != distinguishes) report.violations.push_back({MatrixLaw::Membership, i, j, 0, c});
      }
    }
    ++report.checks;
    if (!matrix.cell_empty(i, i)) report.violations.push_back({MatrixLaw::EmptyDiagonal, i, i, 0, matrix.cell(i, i).first()});
  }

  for (ObjectId i = 0; i < n; ++i) {
    for (ObjectId j = 0; j < n; ++j) {
      if (i == j) continue;
      const CoverSet cij = matrix.cell(i, j);
      if (cij.none()) {
        report.checks += 2 * n;
        continue;
      }
      for (ObjectId t = 0; t < n; ++t) {
        report.checks += 2;
        const CoverSet cit = matrix.cell(i, t);
        const CoverSet triangle_gap = cij - (cit | matrix.cell(j, t));
        if (triangle_gap.any()) report.violations.push_back({MatrixLaw::Triangle, i, j, t, triangle_gap.first()});
        const CoverSet transitive_gap = cij - (cit | matrix.cell(t, j));
        if (transitive_gap.any())
          report.violations.push_back({MatrixLaw::Transitivity, i, j, t, transitive_gap.first()});
      }
    }
  }
  return report;
}

}  // namespace covred
