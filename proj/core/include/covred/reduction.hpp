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

#ifndef COVRED_REDUCTION_HPP
#define COVRED_REDUCTION_HPP

#include <string_view>
#include <vector>

#include "covred/discernibility.hpp"
#include "covred/hitting_set.hpp"

namespace covred {

enum class ReductMethod { Matrix, Legacy, Brute };

std::string_view to_string(ReductMethod method);

/// All reducts of a family plus its core.
///
/// Reducts are in canonical order: by size, then index-lexicographically.
/// `degenerate` is set when no pair of objects is distinguished by any
/// cover; the only reduct is then the empty subset.
struct ReductSet {
  std::vector<CoverSet> reducts;
  CoverSet core;
  bool degenerate = false;

  friend bool operator==(const ReductSet&, const ReductSet&) = default;
};

/// Conjunction of the distinct nonempty matrix cells, each read as a
/// disjunction, after absorption.
class DiscernFunction {
 public:
  static DiscernFunction from_matrix(const DiscernibilityMatrix& matrix);
  /// Uses only cells (i, j) with j < i.
  static DiscernFunction from_lower_triangle(const DiscernibilityMatrix& matrix);

  const std::vector<CoverSet>& clauses() const { return clauses_; }
  std::size_t m() const { return m_; }
  /// True when P hits every clause.
  bool satisfied_by(const CoverSet& p) const;
  /// Prime implicants, each given as its set of covers.
  std::vector<CoverSet> prime_implicants() const;

 private:
  DiscernFunction(std::size_t m, std::vector<CoverSet> clauses);

  std::size_t m_;
  std::vector<CoverSet> clauses_;
};

/// P preserves the family granulation: P(x) equals Delta(x) for every x.
/// Throws EmptySubset for P empty.
bool is_covering_preserving(const CoverFamily& family, const CoverSet& subset);
bool is_covering_preserving(const Granulation& granulation, const CoverSet& subset);

/// Removing `cover` changes some family granule. Throws LastCover when the
/// family has a single cover.
bool is_indispensable(const CoverFamily& family, CoverId cover);
bool is_indispensable(const Granulation& granulation, CoverId cover);

/// Covers that appear as a singleton cell.
CoverSet core_from_matrix(const DiscernibilityMatrix& matrix);

/// P intersects every nonempty cell.
bool reduct_check(const DiscernibilityMatrix& matrix, const CoverSet& subset);

/// Minimal hitting sets of the absorbed discernibility function.
ReductSet all_reducts(const DiscernibilityMatrix& matrix);

/// Minimal subsets satisfying every nonempty legacy cell, where P satisfies
/// a cell if it contains one of its singles or both covers of one pair.
ReductSet all_reducts_legacy(const LegacyMatrix& matrix);

/// Largest family accepted by brute_force_reducts.
inline constexpr std::size_t kBruteForceMaxCovers = 20;

/// Enumerates every subset of covers and keeps the inclusion-minimal
/// covering-preserving ones. The empty subset counts as preserving exactly
/// when every family granule is the whole universe, which is reported as
/// degenerate. Throws TooManyCovers beyond kBruteForceMaxCovers.
ReductSet brute_force_reducts(const CoverFamily& family);

/// Intersection of the given reducts (empty when there are none).
CoverSet intersect_all(const std::vector<CoverSet>& sets, std::size_t m);

}  // namespace covred

#endif  // COVRED_REDUCTION_HPP
