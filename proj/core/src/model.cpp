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

#include "covred/model.hpp"

#include <unordered_set>

namespace covred {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyUniverse: return "EmptyUniverse";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::DuplicateCoverName: return "DuplicateCoverName";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::UnknownCoverName: return "UnknownCoverName";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::LastCover: return "LastCover";
    case ErrorCode::TooManyCovers: return "TooManyCovers";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::NonNumericUnderNumericStrategy: return "NonNumericUnderNumericStrategy";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::EmptyUniverse, "universe must contain at least one object");
  index_.reserve(labels_.size());
  for (ObjectId i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw Error(ErrorCode::DuplicateLabel, "duplicate object label '" + labels_[i] + "'", {labels_[i]});
  }
}

std::optional<ObjectId> Universe::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ObjectSet Universe::set_of(const std::vector<std::string>& labels) const {
  ObjectSet s(size());
  for (const auto& l : labels) {
    auto x = index_of(l);
    if (!x) throw Error(ErrorCode::UnknownLabel, "unknown object label '" + l + "'", {l});
    s.set(*x);
  }
  return s;
}

std::vector<std::string> Universe::labels_of(const ObjectSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t x) { out.push_back(labels_[x]); });
  return out;
}

Cover validate_cover(const Universe& universe, std::string name, std::vector<ObjectSet> blocks,
                     Warnings* warnings) {
  const std::size_t n = universe.size();
  ObjectSet covered(n);
  std::vector<ObjectSet> kept;
  std::unordered_set<ObjectSet> seen;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].size() != n)
      throw Error(ErrorCode::UniverseMismatch, "cover '" + name + "': block " + std::to_string(b) +
                                                    " is sized for a different universe");
    if (blocks[b].none())
      throw Error(ErrorCode::EmptyBlock, "cover '" + name + "': block " + std::to_string(b) + " is empty");
    if (!seen.insert(blocks[b]).second) {
      if (warnings)
        warnings->push_back("cover '" + name + "': dropped duplicate block " + std::to_string(b));
      continue;
    }
    covered |= blocks[b];
    kept.push_back(std::move(blocks[b]));
  }
  if (covered != universe.full_set()) {
    auto missing = universe.labels_of(universe.full_set() - covered);
    std::string msg = "cover '" + name + "' does not cover the universe; uncovered:";
    for (const auto& l : missing) msg += " " + l;
    throw Error(ErrorCode::NotACover, msg, std::move(missing));
  }
  return Cover(std::move(name), std::move(kept), n);
}

Cover validate_cover(const Universe& universe, std::string name,
                     const std::vector<std::vector<std::string>>& raw_blocks, Warnings* warnings) {
  std::vector<ObjectSet> blocks;
  blocks.reserve(raw_blocks.size());
  for (const auto& raw : raw_blocks) {
    try {
      blocks.push_back(universe.set_of(raw));
    } catch (const Error& e) {
      throw Error(e.code(), "cover '" + name + "': " + e.what(), e.details());
    }
  }
  return validate_cover(universe, std::move(name), std::move(blocks), warnings);
}

bool is_partition(const Cover& cover) {
  ObjectSet seen(cover.universe_size());
  for (const auto& b : cover.blocks()) {
    if (seen.intersects(b)) return false;
    seen |= b;
  }
  return true;
}

CoverFamily::CoverFamily(Universe universe, std::vector<Cover> covers)
    : universe_(std::move(universe)), covers_(std::move(covers)) {
  if (covers_.empty()) throw Error(ErrorCode::EmptyFamily, "a cover family needs at least one cover");
  std::unordered_set<std::string> names;
  for (const auto& c : covers_) {
    if (!names.insert(c.name()).second)
      throw Error(ErrorCode::DuplicateCoverName, "duplicate cover name '" + c.name() + "'", {c.name()});
    if (c.universe_size() != universe_.size())
      throw Error(ErrorCode::UniverseMismatch, "cover '" + c.name() + "' was validated against another universe");
  }
}

std::optional<CoverId> CoverFamily::index_of(std::string_view name) const {
  for (CoverId c = 0; c < covers_.size(); ++c)
    if (covers_[c].name() == name) return c;
  return std::nullopt;
}

CoverId CoverFamily::require(std::string_view name) const {
  auto c = index_of(name);
  if (!c) throw Error(ErrorCode::UnknownCoverName, "unknown cover '" + std::string(name) + "'", {std::string(name)});
  return *c;
}

CoverSet CoverFamily::subset_of(const std::vector<std::string>& names) const {
  CoverSet s(m());
  for (const auto& n : names) s.set(require(n));
  return s;
}

std::vector<std::string> CoverFamily::names_of(const CoverSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t c) { out.push_back(covers_[c].name()); });
  return out;
}

}  // namespace covred
