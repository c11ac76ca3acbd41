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

#ifndef COVRED_INGESTION_HPP
#define COVRED_INGESTION_HPP

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "covred/model.hpp"

namespace covred {

/// Parses a cover-family document:
///
///   {"universe": ["x1", ...],
///    "covers": [{"name": "C1", "blocks": [["x1", "x2"], ...]}, ...]}
///
/// Syntax errors carry the byte offset; structural errors the JSON path.
/// Cover validation errors are prefixed with the cover name.
CoverFamily parse_cover_file(std::string_view text, Warnings* warnings = nullptr);

CoverFamily load_cover_file(const std::filesystem::path& path, Warnings* warnings = nullptr);

/// Canonical form: two-space indented JSON, keys in schema order, covers and
/// blocks in family order, block members in universe order, trailing newline.
std::string serialize_family(const CoverFamily& family);

/// Reads a whole file; throws InvalidArgument if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Rectangular attribute-value table. Row r describes object objects[r].
struct Table {
  std::vector<std::string> attributes;
  std::vector<std::string> objects;
  std::vector<std::vector<std::string>> cells;
};

/// Comma-separated; first row names the attributes (its first field is the
/// label column header), first column labels the objects. Double-quoted
/// fields may contain commas and doubled quotes. Empty cells are kept and
/// rejected later as MissingValue; ragged rows are a SyntaxError.
Table parse_csv(std::string_view text);

struct Categorical {
  friend bool operator==(const Categorical&, const Categorical&) = default;
};

/// Tolerance classes {x : |a(x) - a(y)| <= epsilon}, one per object y.
/// With `relative`, epsilon is a fraction of the column range (max - min).
struct Tolerance {
  double epsilon = 0.0;
  bool relative = false;
  friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

/// Bins [e_k, e_k+1) from strictly increasing edges, each widened by
/// overlap * width on both sides. The first bin is open below and the last
/// open above, so every value lands in some bin.
struct IntervalBins {
  std::vector<double> edges;
  double overlap = 0.0;
  friend bool operator==(const IntervalBins&, const IntervalBins&) = default;
};

using AttributeStrategy = std::variant<Categorical, Tolerance, IntervalBins>;

struct TableDerivationConfig {
  std::map<std::string, AttributeStrategy> per_attribute;
  AttributeStrategy fallback = Categorical{};

  const AttributeStrategy& strategy_for(const std::string& attribute) const;
  /// Throws InvalidConfig for a negative epsilon, non-increasing edges, fewer
  /// than two edges, or overlap outside [0, 1).
  void validate() const;

  /// {"default": S, "attributes": {"name": S, ...}} where S is
  /// {"strategy": "categorical"} |
  /// {"strategy": "tolerance", "epsilon": e, "relative": bool} |
  /// {"strategy": "bins", "edges": [...], "overlap": f}.
  static TableDerivationConfig from_json(std::string_view text);
};

/// One cover per attribute, named after the attribute, in column order.
/// Throws MissingValue, NonNumericUnderNumericStrategy, InvalidConfig.
/// Bins that capture no object are dropped with a warning.
CoverFamily covers_from_table(const Table& table, const TableDerivationConfig& config,
                              Warnings* warnings = nullptr);

}  // namespace covred

#endif  // COVRED_INGESTION_HPP
