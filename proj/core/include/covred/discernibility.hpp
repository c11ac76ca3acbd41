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

#ifndef COVRED_DISCERNIBILITY_HPP
#define COVRED_DISCERNIBILITY_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "covred/granulation.hpp"

namespace covred {

struct BuildOptions {
  /// Worker count for row-parallel construction; 0 or 1 runs inline.
  unsigned threads = 1;
};

/// Operation counts gathered during matrix construction.
struct BuildStats {
  /// Granule membership tests "is x_j in C(x_i)" (improved builder).
  std::uint64_t membership_tests = 0;
  /// Granule inclusion comparisons (legacy builder).
  std::uint64_t inclusion_tests = 0;
  /// Candidate conjunctive pairs examined (legacy builder).
  std::uint64_t pair_checks = 0;

  std::uint64_t total() const { return membership_tests + inclusion_tests + pair_checks; }
};

/// Full ordered n x n matrix; cell(i, j) holds the covers C with
/// x_j not in C(x_i). Not symmetric in general.
class DiscernibilityMatrix {
 public:
  DiscernibilityMatrix(std::size_t n, std::size_t m)
      : n_(n), m_(m), stride_(CoverSet::word_count(m)), words_(n * n * stride_, 0) {}

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }

  CoverSet cell(ObjectId i, ObjectId j) const { return CoverSet::from_words(m_, cell_words(i, j)); }
  std::span<const CoverSet::Word> cell_words(ObjectId i, ObjectId j) const {
    return {words_.data() + index(i, j), stride_};
  }
  bool cell_empty(ObjectId i, ObjectId j) const;
  bool cell_contains(ObjectId i, ObjectId j, CoverId c) const {
    return (words_[index(i, j) + c / CoverSet::kWordBits] >> (c % CoverSet::kWordBits)) & 1U;
  }
  void add(ObjectId i, ObjectId j, CoverId c) {
    words_[index(i, j) + c / CoverSet::kWordBits] |= CoverSet::Word{1} << (c % CoverSet::kWordBits);
  }

  /// Distinct nonempty cells, sorted in index-lexicographic order.
  std::vector<CoverSet> unique_cells() const;

  friend bool operator==(const DiscernibilityMatrix&, const DiscernibilityMatrix&) = default;

 private:
  std::size_t index(ObjectId i, ObjectId j) const { return (i * n_ + j) * stride_; }

  std::size_t n_;
  std::size_t m_;
  std::size_t stride_;
  std::vector<CoverSet::Word> words_;
};

/// Builds the improved matrix with exactly m * n * (n - 1) membership tests
/// (the diagonal is empty by reflexivity and is not tested). Output is
/// identical for every thread count.
DiscernibilityMatrix build_matrix(const CoverFamily& family, std::span<const NeighborhoodMap> maps,
                                  const BuildOptions& options = {}, BuildStats* stats = nullptr);

/// Cell of the legacy matrix: single covers plus conjunctive pairs
/// (first, second) read as "first AND second".
struct LegacyCell {
  CoverSet singles;
  std::vector<std::pair<CoverId, CoverId>> pairs;

  bool empty() const { return singles.none() && pairs.empty(); }
  friend bool operator==(const LegacyCell&, const LegacyCell&) = default;
};

/// Legacy three-case matrix. Symmetric by construction: w_ij and w_ji hold
/// the same singles, and mirrored pairs.
class LegacyMatrix {
 public:
  LegacyMatrix(std::size_t n, std::size_t m) : n_(n), m_(m), cells_(n * n, LegacyCell{CoverSet(m), {}}) {}

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  const LegacyCell& cell(ObjectId i, ObjectId j) const { return cells_[i * n_ + j]; }
  LegacyCell& cell(ObjectId i, ObjectId j) { return cells_[i * n_ + j]; }

  friend bool operator==(const LegacyMatrix&, const LegacyMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<LegacyCell> cells_;
};

/// Builds the legacy matrix by literal case analysis on the family granules.
///
/// Inclusion reading: "strictly included" is proper inclusion, "not
/// included" means the subset test fails. Cases per (i, j):
///   - equal family granules: empty;
///   - one family granule strictly inside the other: the covers whose
///     granules are strictly nested the same way;
///   - incomparable: covers with incomparable granules, plus every pair
///     (s, t) with C_s(x_i) strictly inside C_s(x_j) and C_t(x_j) strictly
///     inside C_t(x_i). All m(m-1) ordered pairs are examined.
LegacyMatrix build_legacy_matrix(const CoverFamily& family, std::span<const NeighborhoodMap> maps,
                                 const NeighborhoodMap& fmap, const BuildOptions& options = {},
                                 BuildStats* stats = nullptr);

enum class MatrixLaw {
  Membership,
  EmptyDiagonal,
  /// c_ij within c_it union c_jt, as commonly stated.
  Triangle,
  /// c_ij within c_it union c_tj: if x_t is in C(x_i) and x_j in C(x_t)
  /// then x_j is in C(x_i).
  Transitivity,
};

struct LawViolation {
  MatrixLaw law;
  ObjectId i = 0;
  ObjectId j = 0;
  ObjectId t = 0;  // third object; triangle and transitivity laws
  CoverId cover = 0;
};

struct MatrixLawReport {
  std::uint64_t checks = 0;
  std::vector<LawViolation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(MatrixLaw law) const;
};

/// Checks the membership law against `maps`, the empty diagonal, the
/// triangle law c_ij within c_it union c_jt, and the transitivity law
/// c_ij within c_it union c_tj, for all i != j and all t.
///
/// The triangle law does not hold for overlapping covers: with blocks
/// {a, t} and {b, t}, c_ab = {C} while c_at and c_bt are empty. It is
/// reported separately so callers can tell the two apart.
MatrixLawReport check_matrix_laws(const DiscernibilityMatrix& matrix, std::span<const NeighborhoodMap> maps);

}  // namespace covred

#endif  // COVRED_DISCERNIBILITY_HPP
