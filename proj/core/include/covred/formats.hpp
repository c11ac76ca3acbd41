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

#ifndef COVRED_FORMATS_HPP
#define COVRED_FORMATS_HPP

#include <string>
#include <string_view>

#include "covred/discernibility.hpp"
#include "covred/reduction.hpp"

namespace covred {

// JSON payloads are compact (no whitespace), keys in the documented order,
// terminated by a newline. Labels and cover names appear in family order.

/// {"method":"new","objects":[..],"covers":[..],"cells":[[[names..]..]..]}
std::string matrix_json(const CoverFamily& family, const DiscernibilityMatrix& matrix);

/// {"method":"legacy","objects":[..],"covers":[..],
///  "cells":[[{"singles":[..],"pairs":[["Cs","Ct"]..]}..]..]}
std::string legacy_matrix_json(const CoverFamily& family, const LegacyMatrix& matrix);

/// Fixed-width text table for people; not a stable format.
std::string matrix_grid(const CoverFamily& family, const DiscernibilityMatrix& matrix);
std::string legacy_matrix_grid(const CoverFamily& family, const LegacyMatrix& matrix);

/// {"reducts":[[..]..],"core":[..],"method":"matrix","degenerate":false}
std::string reducts_json(const CoverFamily& family, const ReductSet& reducts, ReductMethod method);

/// {"scope":"C1","granules":{"x1":["x1","x2"],..}}
std::string granules_json(const Universe& universe, const NeighborhoodMap& nmap);

/// {"scope":"C1","target":[..],"lower":[..],"upper":[..]}
std::string approximation_json(const Universe& universe, std::string_view scope, const ApproximationPair& pair);

}  // namespace covred

#endif  // COVRED_FORMATS_HPP
