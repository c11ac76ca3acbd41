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

#ifndef COVRED_MODEL_HPP
#define COVRED_MODEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "covred/bitset.hpp"
#include "covred/error.hpp"

namespace covred {

/// Ordered, finite set of labelled objects. Labels are mapped to indices
/// once; everything downstream works on indices.
class Universe {
 public:
  /// Throws EmptyUniverse or DuplicateLabel.
  explicit Universe(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(ObjectId x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ObjectId> index_of(std::string_view label) const;

  ObjectSet empty_set() const { return ObjectSet(size()); }
  ObjectSet full_set() const { return ObjectSet::full(size()); }

  /// Resolves labels to a set; throws UnknownLabel naming the first miss.
  ObjectSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const ObjectSet& s) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ObjectId> index_;
};

/// A named family of nonempty blocks whose union is the universe.
/// Only constructible through validate_cover.
class Cover {
 public:
  const std::string& name() const { return name_; }
  const std::vector<ObjectSet>& blocks() const { return blocks_; }
  std::size_t universe_size() const { return universe_size_; }

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  friend Cover validate_cover(const Universe&, std::string, std::vector<ObjectSet>, Warnings*);
  Cover(std::string name, std::vector<ObjectSet> blocks, std::size_t n)
      : name_(std::move(name)), blocks_(std::move(blocks)), universe_size_(n) {}

  std::string name_;
  std::vector<ObjectSet> blocks_;
  std::size_t universe_size_ = 0;
};

/// Validates index-based blocks. Duplicate blocks are dropped (first
/// occurrence kept) and reported through `warnings`.
/// Throws EmptyBlock, or NotACover with the uncovered labels as details.
Cover validate_cover(const Universe& universe, std::string name, std::vector<ObjectSet> blocks,
                     Warnings* warnings = nullptr);

/// Label-based overload; additionally throws UnknownLabel.
Cover validate_cover(const Universe& universe, std::string name,
                     const std::vector<std::vector<std::string>>& raw_blocks,
                     Warnings* warnings = nullptr);

/// True iff the blocks are pairwise disjoint.
bool is_partition(const Cover& cover);

/// A covering information system: one universe, m >= 1 uniquely named covers.
class CoverFamily {
 public:
  /// Throws EmptyFamily, DuplicateCoverName or UniverseMismatch.
  CoverFamily(Universe universe, std::vector<Cover> covers);

  const Universe& universe() const { return universe_; }
  const std::vector<Cover>& covers() const { return covers_; }
  const Cover& cover(CoverId c) const { return covers_.at(c); }
  std::size_t n() const { return universe_.size(); }
  std::size_t m() const { return covers_.size(); }

  std::optional<CoverId> index_of(std::string_view name) const;
  /// Throws UnknownCoverName.
  CoverId require(std::string_view name) const;

  CoverSet empty_subset() const { return CoverSet(m()); }
  CoverSet all_covers() const { return CoverSet::full(m()); }
  /// Throws UnknownCoverName.
  CoverSet subset_of(const std::vector<std::string>& names) const;
  /// Cover names of a subset, in family order.
  std::vector<std::string> names_of(const CoverSet& s) const;

  friend bool operator==(const CoverFamily&, const CoverFamily&) = default;

 private:
  Universe universe_;
  std::vector<Cover> covers_;
};

}  // namespace covred

#endif  // COVRED_MODEL_HPP
