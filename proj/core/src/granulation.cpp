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

#include "covred/granulation.hpp"

#include <cassert>

namespace covred {

ObjectSet minimal_description(const Cover& cover, ObjectId x) {
  assert(x < cover.universe_size());
  ObjectSet g = ObjectSet::full(cover.universe_size());
  for (const auto& b : cover.blocks())
    if (b.test(x)) g &= b;
  return g;
}

NeighborhoodMap induced_cover(const Cover& cover) {
  const std::size_t n = cover.universe_size();
  // One pass over the blocks; each block narrows the granules of its members.
  std::vector<ObjectSet> granules(n, ObjectSet::full(n));
  for (const auto& b : cover.blocks())
    b.for_each([&](ObjectId x) { granules[x] &= b; });
  return NeighborhoodMap(cover.name(), std::move(granules));
}

std::vector<NeighborhoodMap> induced_covers(const CoverFamily& family) {
  std::vector<NeighborhoodMap> maps;
  maps.reserve(family.m());
  for (const auto& c : family.covers()) maps.push_back(induced_cover(c));
  return maps;
}

ObjectSet family_granule(std::span<const NeighborhoodMap> maps, const CoverSet& subset, ObjectId x) {
  assert(subset.size() == maps.size());
  assert(!maps.empty());
  ObjectSet g = ObjectSet::full(maps.front().size());
  subset.for_each([&](CoverId c) { g &= maps[c].granule(x); });
  return g;
}

ObjectSet family_granule(const CoverFamily& family, ObjectId x) {
  ObjectSet g = family.universe().full_set();
  for (const auto& c : family.covers()) g &= minimal_description(c, x);
  return g;
}

NeighborhoodMap induced_cover_family(std::span<const NeighborhoodMap> maps, const CoverSet& subset) {
  assert(!maps.empty());
  const std::size_t n = maps.front().size();
  std::vector<ObjectSet> granules;
  granules.reserve(n);
  for (ObjectId x = 0; x < n; ++x) granules.push_back(family_granule(maps, subset, x));
  return NeighborhoodMap("family", std::move(granules));
}

NeighborhoodMap induced_cover_family(std::span<const NeighborhoodMap> maps) {
  return induced_cover_family(maps, CoverSet::full(maps.size()));
}

NeighborhoodMap induced_cover_family(const CoverFamily& family) {
  auto maps = induced_covers(family);
  return induced_cover_family(maps);
}

ObjectSet lower_approx(const NeighborhoodMap& nmap, const ObjectSet& target) {
  ObjectSet out(target.size());
  for (const auto& g : nmap.granules())
    if (g.is_subset_of(target)) out |= g;
  return out;
}

ObjectSet upper_approx(const NeighborhoodMap& nmap, const ObjectSet& target) {
  ObjectSet out(target.size());
  for (const auto& g : nmap.granules())
    if (g.intersects(target)) out |= g;
  return out;
}

ApproximationPair approximate(const NeighborhoodMap& nmap, const ObjectSet& target) {
  return {lower_approx(nmap, target), upper_approx(nmap, target), target};
}

Granulation granulate(const CoverFamily& family) {
  auto maps = induced_covers(family);
  auto fmap = induced_cover_family(maps);
  return {std::move(maps), std::move(fmap)};
}

}  // namespace covred
