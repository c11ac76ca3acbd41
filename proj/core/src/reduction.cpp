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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace covred {

std::string_view to_string(ReductMethod method) {
  switch (method) {
    case ReductMethod::Matrix: return "matrix";
    case ReductMethod::Legacy: return "legacy";
    case ReductMethod::Brute: return "brute";
  }
  return "unknown";
}

CoverSet intersect_all(const std::vector<CoverSet>& sets, std::size_t m) {
  if (sets.empty()) return CoverSet(m);
  CoverSet out = sets.front();
  for (const auto& s : sets) out &= s;
  return out;
}

namespace {

ReductSet degenerate_result(std::size_t m) {
  ReductSet r;
  r.reducts.push_back(CoverSet(m));
  r.core = CoverSet(m);
  r.degenerate = true;
  return r;
}

ReductSet finish(std::vector<CoverSet> reducts, std::size_t m) {
  canonical_sort(reducts);
  ReductSet r;
  r.core = intersect_all(reducts, m);
  r.reducts = std::move(reducts);
  return r;
}

}  // namespace

DiscernFunction::DiscernFunction(std::size_t m, std::vector<CoverSet> clauses)
    : m_(m), clauses_(absorb(std::move(clauses))) {}

DiscernFunction DiscernFunction::from_matrix(const DiscernibilityMatrix& matrix) {
  return DiscernFunction(matrix.m(), matrix.unique_cells());
}

DiscernFunction DiscernFunction::from_lower_triangle(const DiscernibilityMatrix& matrix) {
  std::vector<CoverSet> cells;
  for (ObjectId i = 0; i < matrix.n(); ++i)
    for (ObjectId j = 0; j < i; ++j)
      if (!matrix.cell_empty(i, j)) cells.push_back(matrix.cell(i, j));
  return DiscernFunction(matrix.m(), std::move(cells));
}

bool DiscernFunction::satisfied_by(const CoverSet& p) const {
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const CoverSet& c) { return c.intersects(p); });
}

std::vector<CoverSet> DiscernFunction::prime_implicants() const { return minimal_hitting_sets(clauses_, m_); }

bool is_covering_preserving(const Granulation& granulation, const CoverSet& subset) {
  if (subset.none()) throw Error(ErrorCode::EmptySubset, "covering preservation is undefined for an empty subset");
  const auto& fmap = granulation.family;
  for (ObjectId x = 0; x < fmap.size(); ++x)
    if (family_granule(granulation.covers, subset, x) != fmap.granule(x)) return false;
  return true;
}

bool is_covering_preserving(const CoverFamily& family, const CoverSet& subset) {
  return is_covering_preserving(granulate(family), subset);
}

bool is_indispensable(const Granulation& granulation, CoverId cover) {
  const std::size_t m = granulation.covers.size();
  if (m < 2) throw Error(ErrorCode::LastCover, "cannot remove the only cover of a family");
  CoverSet rest = CoverSet::full(m);
  rest.reset(cover);
  return !is_covering_preserving(granulation, rest);
}

bool is_indispensable(const CoverFamily& family, CoverId cover) {
  if (family.m() < 2) throw Error(ErrorCode::LastCover, "cannot remove the only cover of a family");
  return is_indispensable(granulate(family), cover);
}

CoverSet core_from_matrix(const DiscernibilityMatrix& matrix) {
  CoverSet core(matrix.m());
  for (ObjectId i = 0; i < matrix.n(); ++i) {
    for (ObjectId j = 0; j < matrix.n(); ++j) {
      const CoverSet cell = matrix.cell(i, j);
      if (cell.count() == 1) core |= cell;
    }
  }
  return core;
}

bool reduct_check(const DiscernibilityMatrix& matrix, const CoverSet& subset) {
  for (ObjectId i = 0; i < matrix.n(); ++i) {
    for (ObjectId j = 0; j < matrix.n(); ++j) {
      if (matrix.cell_empty(i, j)) continue;
      if (!matrix.cell(i, j).intersects(subset)) return false;
    }
  }
  return true;
}

ReductSet all_reducts(const DiscernibilityMatrix& matrix) {
  const auto function = DiscernFunction::from_matrix(matrix);
  if (function.clauses().empty()) return degenerate_result(matrix.m());
  return finish(function.prime_implicants(), matrix.m());
}

ReductSet all_reducts_legacy(const LegacyMatrix& matrix) {
  const std::size_t m = matrix.m();
  std::vector<TermClause> clauses;
  for (ObjectId i = 0; i < matrix.n(); ++i) {
    for (ObjectId j = 0; j < matrix.n(); ++j) {
      const LegacyCell& cell = matrix.cell(i, j);
      if (cell.empty()) continue;
      TermClause clause;
      cell.singles.for_each([&](CoverId c) { clause.push_back(CoverSet(m, {c})); });
      for (const auto& [s, t] : cell.pairs) {
        // A pair containing one of the singles is absorbed by it.
        if (cell.singles.test(s) || cell.singles.test(t)) continue;
        clause.push_back(CoverSet(m, {s, t}));
      }
      std::sort(clause.begin(), clause.end());
      clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
      clauses.push_back(std::move(clause));
    }
  }
  if (clauses.empty()) return degenerate_result(m);
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  return finish(minimal_satisfying_sets(clauses, m), m);
}

ReductSet brute_force_reducts(const CoverFamily& family) {
  const std::size_t m = family.m();
  if (m > kBruteForceMaxCovers)
    throw Error(ErrorCode::TooManyCovers, "brute-force reduction supports at most " +
                                              std::to_string(kBruteForceMaxCovers) + " covers, got " +
                                              std::to_string(m));
  const Granulation g = granulate(family);
  const std::size_t n = family.n();
  const std::uint32_t limit = std::uint32_t{1} << m;

  auto to_set = [m](std::uint32_t mask) {
    CoverSet s(m);
    for (CoverId c = 0; c < m; ++c)
      if (mask & (std::uint32_t{1} << c)) s.set(c);
    return s;
  };
  auto preserves = [&](std::uint32_t mask) {
    const CoverSet s = to_set(mask);
    for (ObjectId x = 0; x < n; ++x)
      if (family_granule(g.covers, s, x) != g.family.granule(x)) return false;
    return true;
  };

  // Visit masks by increasing size so a preserving mask is minimal iff no
  // earlier minimal mask is contained in it.
  std::vector<std::uint32_t> masks(limit);
  for (std::uint32_t mask = 0; mask < limit; ++mask) masks[mask] = mask;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

  std::vector<std::uint32_t> minimal;
  for (std::uint32_t mask : masks) {
    if (std::any_of(minimal.begin(), minimal.end(), [mask](std::uint32_t k) { return (k & mask) == k; })) continue;
    if (preserves(mask)) minimal.push_back(mask);
  }

  if (minimal.size() == 1 && minimal.front() == 0) return degenerate_result(m);
  std::vector<CoverSet> reducts;
  reducts.reserve(minimal.size());
  for (std::uint32_t mask : minimal) reducts.push_back(to_set(mask));
  return finish(std::move(reducts), m);
}

}  // namespace covred
