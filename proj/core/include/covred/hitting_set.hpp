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

#ifndef COVRED_HITTING_SET_HPP
#define COVRED_HITTING_SET_HPP

#include <span>
#include <vector>

#include "covred/bitset.hpp"

namespace covred {

/// Removes duplicate clauses and every clause that is a superset of another
/// (absorption: (a | b) & a == a). Result is in index-lexicographic order.
std::vector<CoverSet> absorb(std::vector<CoverSet> clauses);

/// All inclusion-minimal sets that intersect every clause.
///
/// Depth-first search: branch on the shortest clause not yet hit, try its
/// elements in order while excluding the earlier ones, and prune any branch
/// in which a chosen element has lost its last private clause (a clause hit
/// by that element alone). Exact; each minimal hitting set is emitted once.
/// Clauses must be nonempty. `universe` is the element count.
std::vector<CoverSet> minimal_hitting_sets(std::span<const CoverSet> clauses, std::size_t universe);

/// A disjunction of conjunctive terms: satisfied by P when some term is a
/// subset of P.
using TermClause = std::vector<CoverSet>;

/// All inclusion-minimal sets satisfying every clause. Generalizes
/// minimal_hitting_sets to clauses whose alternatives are conjunctions.
std::vector<CoverSet> minimal_satisfying_sets(std::span<const TermClause> clauses, std::size_t universe);

/// Sorts by size, then index-lexicographically.
void canonical_sort(std::vector<CoverSet>& sets);

}  // namespace covred

#endif  // COVRED_HITTING_SET_HPP
