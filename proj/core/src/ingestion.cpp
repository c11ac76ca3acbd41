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

#include "covred/ingestion.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace covred {

using json = nlohmann::ordered_json;

namespace {

std::string line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void structure_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "at " + path + ": " + what, {path});
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) structure_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) structure_error(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_array(const json& arr, const std::string& path) {
  if (!arr.is_array()) structure_error(path, "expected an array of strings");
  std::vector<std::string> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) structure_error(path + "/" + std::to_string(i), "expected a string");
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::SyntaxError,
                "malformed JSON at byte " + std::to_string(at) + " (" + line_column(text, at) + ")",
                {std::to_string(at)});
  }
}

}  // namespace

CoverFamily parse_cover_file(std::string_view text, Warnings* warnings) {
  const json doc = parse_json(text);
  Universe universe(string_array(member(doc, "universe", ""), "/universe"));
  const json& covers = member(doc, "covers", "");
  if (!covers.is_array()) structure_error("/covers", "expected an array");

  std::vector<Cover> parsed;
  parsed.reserve(covers.size());
  for (std::size_t c = 0; c < covers.size(); ++c) {
    const std::string path = "/covers/" + std::to_string(c);
    const json& name = member(covers[c], "name", path);
    if (!name.is_string()) structure_error(path + "/name", "expected a string");
    const json& blocks = member(covers[c], "blocks", path);
    if (!blocks.is_array()) structure_error(path + "/blocks", "expected an array");
    std::vector<std::vector<std::string>> raw;
    raw.reserve(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
      raw.push_back(string_array(blocks[b], path + "/blocks/" + std::to_string(b)));
    parsed.push_back(validate_cover(universe, name.get<std::string>(), raw, warnings));
  }
  return CoverFamily(std::move(universe), std::move(parsed));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path.string() + "'", {path.string()});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CoverFamily load_cover_file(const std::filesystem::path& path, Warnings* warnings) {
  return parse_cover_file(read_text_file(path), warnings);
}

std::string serialize_family(const CoverFamily& family) {
  json doc;
  doc["universe"] = family.universe().labels();
  json covers = json::array();
  for (const auto& c : family.covers()) {
    json blocks = json::array();
    for (const auto& b : c.blocks()) blocks.push_back(family.universe().labels_of(b));
    covers.push_back(json{{"name", c.name()}, {"blocks", std::move(blocks)}});
  }
  doc["covers"] = std::move(covers);
  return doc.dump(2) + "\n";
}

Table parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    const bool blank = row.size() == 1 && row.front().empty();
    if (!blank) rows.push_back(std::move(row));
    row.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line;
        field += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (field_started && !field.empty())
          throw Error(ErrorCode::SyntaxError, "CSV line " + std::to_string(line) + ": stray quote");
        quoted = true;
        field_started = true;
        break;
      case ',': end_field(); break;
      case '\r': break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        field += ch;
        field_started = true;
    }
  }
  if (quoted) throw Error(ErrorCode::SyntaxError, "CSV: unterminated quoted field");
  if (field_started || !row.empty()) end_row();

  if (rows.empty()) throw Error(ErrorCode::SyntaxError, "CSV: no header row");
  Table t;
  const auto& header = rows.front();
  if (header.size() < 2) throw Error(ErrorCode::SyntaxError, "CSV: header needs a label column and an attribute");
  t.attributes.assign(header.begin() + 1, header.end());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != header.size())
      throw Error(ErrorCode::SyntaxError, "CSV row " + std::to_string(r + 1) + ": expected " +
                                              std::to_string(header.size()) + " fields, got " +
                                              std::to_string(rows[r].size()));
    t.objects.push_back(rows[r].front());
    t.cells.emplace_back(rows[r].begin() + 1, rows[r].end());
  }
  if (t.objects.empty()) throw Error(ErrorCode::SyntaxError, "CSV: no data rows");
  return t;
}

const AttributeStrategy& TableDerivationConfig::strategy_for(const std::string& attribute) const {
  auto it = per_attribute.find(attribute);
  return it == per_attribute.end() ? fallback : it->second;
}

namespace {

void validate_strategy(const AttributeStrategy& s, const std::string& where) {
  if (const auto* tol = std::get_if<Tolerance>(&s)) {
    if (!(tol->epsilon >= 0.0) || !std::isfinite(tol->epsilon))
      throw Error(ErrorCode::InvalidConfig, where + ": epsilon must be a finite nonnegative number");
  } else if (const auto* bins = std::get_if<IntervalBins>(&s)) {
    if (bins->edges.size() < 2) throw Error(ErrorCode::InvalidConfig, where + ": bins need at least two edges");
    for (std::size_t k = 1; k < bins->edges.size(); ++k)
      if (!(bins->edges[k - 1] < bins->edges[k]))
        throw Error(ErrorCode::InvalidConfig, where + ": bin edges must be strictly increasing");
    if (!(bins->overlap >= 0.0 && bins->overlap < 1.0))
      throw Error(ErrorCode::InvalidConfig, where + ": overlap must lie in [0, 1)");
  }
}

AttributeStrategy strategy_from_json(const json& j, const std::string& path) {
  const json& kind = member(j, "strategy", path);
  if (!kind.is_string()) structure_error(path + "/strategy", "expected a string");
  const auto name = kind.get<std::string>();
  auto number = [&](const char* key, double fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number()) structure_error(path + "/" + key, "expected a number");
    return it->get<double>();
  };
  if (name == "categorical") return Categorical{};
  if (name == "tolerance") {
    Tolerance t{number("epsilon", 0.0), false};
    if (auto it = j.find("relative"); it != j.end()) {
      if (!it->is_boolean()) structure_error(path + "/relative", "expected a boolean");
      t.relative = it->get<bool>();
    }
    return t;
  }
  if (name == "bins") {
    IntervalBins b;
    const json& edges = member(j, "edges", path);
    if (!edges.is_array()) structure_error(path + "/edges", "expected an array of numbers");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!edges[k].is_number()) structure_error(path + "/edges/" + std::to_string(k), "expected a number");
      b.edges.push_back(edges[k].get<double>());
    }
    b.overlap = number("overlap", 0.0);
    return b;
  }
  throw Error(ErrorCode::InvalidConfig, "at " + path + "/strategy: unknown strategy '" + name + "'");
}

std::optional<double> parse_number(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && last[-1] == ' ') --last;
  if (first < last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

void TableDerivationConfig::validate() const {
  validate_strategy(fallback, "default strategy");
  for (const auto& [attr, s] : per_attribute) validate_strategy(s, "attribute '" + attr + "'");
}

TableDerivationConfig TableDerivationConfig::from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) structure_error("", "expected an object");
  TableDerivationConfig cfg;
  if (auto it = doc.find("default"); it != doc.end()) cfg.fallback = strategy_from_json(*it, "/default");
  if (auto it = doc.find("attributes"); it != doc.end()) {
    if (!it->is_object()) structure_error("/attributes", "expected an object");
    for (const auto& [attr, s] : it->items()) cfg.per_attribute[attr] = strategy_from_json(s, "/attributes/" + attr);
  }
  cfg.validate();
  return cfg;
}

CoverFamily covers_from_table(const Table& table, const TableDerivationConfig& config, Warnings* warnings) {
  config.validate();
  for (const auto& [attr, s] : config.per_attribute)
    if (std::find(table.attributes.begin(), table.attributes.end(), attr) == table.attributes.end())
      throw Error(ErrorCode::InvalidConfig, "configured attribute '" + attr + "' is not a table column", {attr});

  Universe universe(table.objects);
  const std::size_t n = universe.size();
  std::vector<Cover> covers;

  for (std::size_t a = 0; a < table.attributes.size(); ++a) {
    const std::string& attr = table.attributes[a];
    std::vector<std::string> column(n);
    for (ObjectId x = 0; x < n; ++x) {
      column[x] = table.cells.at(x).at(a);
      if (column[x].empty())
        throw Error(ErrorCode::MissingValue,
                    "missing value for object '" + table.objects[x] + "', attribute '" + attr + "'",
                    {table.objects[x], attr});
    }

    const AttributeStrategy& strategy = config.strategy_for(attr);
    std::vector<ObjectSet> blocks;

    if (std::holds_alternative<Categorical>(strategy)) {
      // Equality classes in order of first appearance.
      std::vector<std::string> seen;
      for (ObjectId x = 0; x < n; ++x) {
        auto it = std::find(seen.begin(), seen.end(), column[x]);
        if (it == seen.end()) {
          seen.push_back(column[x]);
          blocks.emplace_back(n);
          blocks.back().set(x);
        } else {
          blocks[static_cast<std::size_t>(it - seen.begin())].set(x);
        }
      }
    } else {
      std::vector<double> values(n);
      for (ObjectId x = 0; x < n; ++x) {
        auto v = parse_number(column[x]);
        if (!v)
          throw Error(ErrorCode::NonNumericUnderNumericStrategy,
                      "attribute '" + attr + "': value '" + column[x] + "' of object '" + table.objects[x] +
                          "' is not numeric",
                      {table.objects[x], attr});
        values[x] = *v;
      }

      if (const auto* tol = std::get_if<Tolerance>(&strategy)) {
        double eps = tol->epsilon;
        if (tol->relative) {
          const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
          eps *= (*hi - *lo);
        }
        for (ObjectId y = 0; y < n; ++y) {
          ObjectSet block(n);
          for (ObjectId x = 0; x < n; ++x)
            if (std::fabs(values[x] - values[y]) <= eps) block.set(x);
          blocks.push_back(std::move(block));
        }
      } else {
        const auto& bins = std::get<IntervalBins>(strategy);
        const std::size_t k = bins.edges.size() - 1;
        for (std::size_t b = 0; b < k; ++b) {
          const double width = bins.edges[b + 1] - bins.edges[b];
          const double lo = b == 0 ? -std::numeric_limits<double>::infinity()
                                   : bins.edges[b] - bins.overlap * width;
          const double hi = b + 1 == k ? std::numeric_limits<double>::infinity()
                                       : bins.edges[b + 1] + bins.overlap * width;
          ObjectSet block(n);
          for (ObjectId x = 0; x < n; ++x)
            if (values[x] >= lo && values[x] < hi) block.set(x);
          if (block.none()) {
            if (warnings)
              warnings->push_back("attribute '" + attr + "': bin " + std::to_string(b) +
                                  " captures no object and was dropped");
            continue;
          }
          blocks.push_back(std::move(block));
        }
      }
    }

    Warnings dedup;
    covers.push_back(validate_cover(universe, attr, std::move(blocks), &dedup));
    // Tolerance classes routinely coincide; that is expected, not noteworthy.
    if (warnings && !std::holds_alternative<Tolerance>(strategy))
      warnings->insert(warnings->end(), dedup.begin(), dedup.end());
  }
  return CoverFamily(std::move(universe), std::move(covers));
}

}  // namespace covred
