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

#include "covred/synthetic.hpp"

#include <string>

namespace covred {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

CoverFamily generate_family(const SyntheticSpec& spec) {
  if (spec.n == 0 || spec.m == 0) throw Error(ErrorCode::InvalidArgument, "synthetic families need n >= 1 and m >= 1");
  if (spec.min_blocks == 0 || spec.min_blocks > spec.max_blocks)
    throw Error(ErrorCode::InvalidArgument, "blocks per cover must satisfy 1 <= min <= max");
  if (!(spec.density > 0.0 && spec.density <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "block density must lie in (0, 1]");

  Rng rng(spec.seed);
  std::vector<std::string> labels;
  labels.reserve(spec.n);
  for (std::size_t x = 0; x < spec.n; ++x) labels.push_back("x" + std::to_string(x + 1));
  Universe universe(std::move(labels));

  std::vector<Cover> covers;
  covers.reserve(spec.m);
  for (std::size_t c = 0; c < spec.m; ++c) {
    const std::size_t count = rng.between(spec.min_blocks, spec.max_blocks);
    std::vector<ObjectSet> blocks(count, ObjectSet(spec.n));
    for (auto& b : blocks)
      for (ObjectId x = 0; x < spec.n; ++x)
        if (rng.unit() < spec.density) b.set(x);

    ObjectSet covered(spec.n);
    for (const auto& b : blocks) covered |= b;
    for (ObjectId x = 0; x < spec.n; ++x)
      if (!covered.test(x)) blocks[rng.below(count)].set(x);
    for (auto& b : blocks)
      if (b.none()) b.set(rng.below(spec.n));

    covers.push_back(validate_cover(universe, "C" + std::to_string(c + 1), std::move(blocks)));
  }
  return CoverFamily(std::move(universe), std::move(covers));
}

}  // namespace covred
