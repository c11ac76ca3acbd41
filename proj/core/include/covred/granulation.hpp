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

#ifndef COVRED_GRANULATION_HPP
#define COVRED_GRANULATION_HPP

#include <span>
#include <string>
#include <vector>

#include "covred/model.hpp"

namespace covred {

/// Per-object minimal-description granules of one cover, or of a whole
/// family. granule(x) always contains x, and y in granule(x) implies
/// granule(y) is a subset of granule(x).
class NeighborhoodMap {
 public:
  NeighborhoodMap(std::string source, std::vector<ObjectSet> granules)
      : source_(std::move(source)), granules_(std::move(granules)) {}

  const std::string& source() const { return source_; }
  std::size_t size() const { return granules_.size(); }
  const ObjectSet& granule(ObjectId x) const { return granules_.at(x); }
  const std::vector<ObjectSet>& granules() const { return granules_; }

  friend bool operator==(const NeighborhoodMap&, const NeighborhoodMap&) = default;

 private:
  std::string source_;
  std::vector<ObjectSet> granules_;
};

/// Lower/upper covering approximation of `target`.
struct ApproximationPair {
  ObjectSet lower;
  ObjectSet upper;
  ObjectSet target;
};

/// Intersection of all blocks of `cover` containing x.
ObjectSet minimal_description(const Cover& cover, ObjectId x);

/// The induced cover: minimal_description for every object.
NeighborhoodMap induced_cover(const Cover& cover);

/// induced_cover for each cover of the family, in family order.
std::vector<NeighborhoodMap> induced_covers(const CoverFamily& family);

/// Intersection of the per-cover granules of x over the covers in `subset`.
/// An empty subset yields the whole universe (empty intersection).
ObjectSet family_granule(std::span<const NeighborhoodMap> maps, const CoverSet& subset, ObjectId x);

/// Family-level granule of x over every cover of the family.
ObjectSet family_granule(const CoverFamily& family, ObjectId x);

/// Granules over the covers in `subset` for every object.
NeighborhoodMap induced_cover_family(std::span<const NeighborhoodMap> maps, const CoverSet& subset);
NeighborhoodMap induced_cover_family(std::span<const NeighborhoodMap> maps);
NeighborhoodMap induced_cover_family(const CoverFamily& family);

/// Union of the granules contained in `target`.
///
/// Defined over any neighborhood map. For a single cover this is the usual
/// covering lower approximation; for a family map it is the natural
/// extension using the family granules.
ObjectSet lower_approx(const NeighborhoodMap& nmap, const ObjectSet& target);

/// Union of the granules that meet `target`.
ObjectSet upper_approx(const NeighborhoodMap& nmap, const ObjectSet& target);

ApproximationPair approximate(const NeighborhoodMap& nmap, const ObjectSet& target);

/// Cached granulation of a family: one map per cover plus the family map.
struct Granulation {
  std::vector<NeighborhoodMap> covers;
  NeighborhoodMap family;
};

Granulation granulate(const CoverFamily& family);

}  // namespace covred

#endif  // COVRED_GRANULATION_HPP
