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

#include "covred/hitting_set.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <unordered_set>

namespace covred {

void canonical_sort(std::vector<CoverSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const CoverSet& a, const CoverSet& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca < cb;
    return index_lex_less(a, b);
  });
}

std::vector<CoverSet> absorb(std::vector<CoverSet> clauses) {
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  // Shorter clauses first so every absorber precedes what it absorbs.
  std::stable_sort(clauses.begin(), clauses.end(),
                   [](const CoverSet& a, const CoverSet& b) { return a.count() < b.count(); });
  std::vector<CoverSet> kept;
  for (auto& c : clauses) {
    const bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const CoverSet& k) { return k.is_subset_of(c); });
    if (!absorbed) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(), index_lex_less<CoverTag>);
  return kept;
}

namespace {

class HittingSetSearch {
 public:
  HittingSetSearch(std::span<const CoverSet> clauses, std::size_t universe)
      : clauses_(clauses), universe_(universe) {}

  std::vector<CoverSet> run() {
    CoverSet chosen(universe_);
    CoverSet excluded(universe_);
    search(chosen, excluded);
    return std::move(found_);
  }

 private:
  // Every chosen element must still be the sole hitter of some clause.
  bool all_critical(const CoverSet& chosen) const {
    CoverSet critical(universe_);
    for (const auto& clause : clauses_) {
      const CoverSet hit = clause & chosen;
      if (hit.count() == 1) critical |= hit;
    }
    return critical == chosen;
  }

  void search(CoverSet& chosen, CoverSet excluded) {
    const CoverSet* branch = nullptr;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    CoverSet open(universe_);
    for (const auto& clause : clauses_) {
      if (clause.intersects(chosen)) continue;
      CoverSet candidates = clause - excluded;
      const std::size_t size = candidates.count();
      if (size < best) {
        best = size;
        branch = &clause;
        open = std::move(candidates);
        if (size == 0) return;
      }
    }
    if (branch == nullptr) {
      found_.push_back(chosen);
      return;
    }
    open.for_each([&](CoverId e) {
      chosen.set(e);
      if (all_critical(chosen)) search(chosen, excluded);
      chosen.reset(e);
      excluded.set(e);
    });
  }

  std::span<const CoverSet> clauses_;
  std::size_t universe_;
  std::vector<CoverSet> found_;
};

class SatisfyingSetSearch {
 public:
  SatisfyingSetSearch(std::span<const TermClause> clauses, std::size_t universe)
      : clauses_(clauses), universe_(universe) {}

  std::vector<CoverSet> run() {
    search(CoverSet(universe_));
    // Leaves can be non-minimal; every minimal set is itself a leaf.
    canonical_sort(leaves_);
    std::vector<CoverSet> minimal;
    for (const auto& s : leaves_) {
      const bool dominated =
          std::any_of(minimal.begin(), minimal.end(), [&](const CoverSet& k) { return k.is_subset_of(s); });
      if (!dominated) minimal.push_back(s);
    }
    return minimal;
  }

 private:
  static bool satisfied(const TermClause& clause, const CoverSet& p) {
    return std::any_of(clause.begin(), clause.end(), [&](const CoverSet& t) { return t.is_subset_of(p); });
  }

  void search(const CoverSet& p) {
    if (!visited_.insert(p).second) return;
    if (std::any_of(leaves_.begin(), leaves_.end(), [&](const CoverSet& s) { return s.is_subset_of(p); })) return;
    const TermClause* branch = nullptr;
    for (const auto& clause : clauses_) {
      if (satisfied(clause, p)) continue;
      if (branch == nullptr || clause.size() < branch->size()) branch = &clause;
    }
    if (branch == nullptr) {
      leaves_.push_back(p);
      return;
    }
    for (const auto& term : *branch) search(p | term);
  }

  std::span<const TermClause> clauses_;
  std::size_t universe_;
  std::vector<CoverSet> leaves_;
  std::unordered_set<CoverSet> visited_;
};

}  // namespace

std::vector<CoverSet> minimal_hitting_sets(std::span<const CoverSet> clauses, std::size_t universe) {
  for (const auto& c : clauses) {
    assert(c.size() == universe);
    if (c.none()) return {};
  }
  auto sets = HittingSetSearch(clauses, universe).run();
  canonical_sort(sets);
  return sets;
}

std::vector<CoverSet> minimal_satisfying_sets(std::span<const TermClause> clauses, std::size_t universe) {
  for (const auto& c : clauses)
    if (c.empty()) return {};
  return SatisfyingSetSearch(clauses, universe).run();
}

}  // namespace covred
