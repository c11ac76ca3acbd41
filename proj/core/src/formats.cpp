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

#include "covred/formats.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace covred {

using json = nlohmann::ordered_json;

namespace {

std::string finish(const json& j) { return j.dump() + "\n"; }

json names(const CoverFamily& family, const CoverSet& s) { return family.names_of(s); }

json legacy_cell_json(const CoverFamily& family, const LegacyCell& cell) {
  json pairs = json::array();
  for (const auto& [s, t] : cell.pairs) pairs.push_back({family.cover(s).name(), family.cover(t).name()});
  return json{{"singles", names(family, cell.singles)}, {"pairs", std::move(pairs)}};
}

std::string render_grid(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& text) {
  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.size());
  for (const auto& row : text)
    for (const auto& c : row) width = std::max(width, c.size());
  std::ostringstream out;
  auto pad = [&](const std::string& s) { out << s << std::string(width - s.size() + 2, ' '); };
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  out << std::string(label_width + 2, ' ');
  for (const auto& l : labels) pad(l);
  out << '\n';
  for (std::size_t i = 0; i < text.size(); ++i) {
    out << labels[i] << std::string(label_width - labels[i].size() + 2, ' ');
    for (const auto& c : text[i]) pad(c);
    out << '\n';
  }
  return out.str();
}

std::string braces(const std::vector<std::string>& items) {
  if (items.empty()) return "-";
  std::string s = "{";
  for (std::size_t k = 0; k < items.size(); ++k) s += (k ? "," : "") + items[k];
  return s + "}";
}

}  // namespace

std::string matrix_json(const CoverFamily& family, const DiscernibilityMatrix& matrix) {
  json cells = json::array();
  for (ObjectId i = 0; i < matrix.n(); ++i) {
    json row = json::array();
    for (ObjectId j = 0; j < matrix.n(); ++j) row.push_back(names(family, matrix.cell(i, j)));
    cells.push_back(std::move(row));
  }
  json doc;
  doc["method"] = "new";
  doc["objects"] = family.universe().labels();
  doc["covers"] = names(family, family.all_covers());
  doc["cells"] = std::move(cells);
  return finish(doc);
}

std::string legacy_matrix_json(const CoverFamily& family, const LegacyMatrix& matrix) {
  json cells = json::array();
  for (ObjectId i = 0; i < matrix.n(); ++i) {
    json row = json::array();
    for (ObjectId j = 0; j < matrix.n(); ++j) row.push_back(legacy_cell_json(family, matrix.cell(i, j)));
    cells.push_back(std::move(row));
  }
  json doc;
  doc["method"] = "legacy";
  doc["objects"] = family.universe().labels();
  doc["covers"] = names(family, family.all_covers());
  doc["cells"] = std::move(cells);
  return finish(doc);
}

std::string matrix_grid(const CoverFamily& family, const DiscernibilityMatrix& matrix) {
  std::vector<std::vector<std::string>> text(matrix.n());
  for (ObjectId i = 0; i < matrix.n(); ++i)
    for (ObjectId j = 0; j < matrix.n(); ++j) text[i].push_back(braces(family.names_of(matrix.cell(i, j))));
  return render_grid(family.universe().labels(), text);
}

std::string legacy_matrix_grid(const CoverFamily& family, const LegacyMatrix& matrix) {
  std::vector<std::vector<std::string>> text(matrix.n());
  for (ObjectId i = 0; i < matrix.n(); ++i) {
    for (ObjectId j = 0; j < matrix.n(); ++j) {
      const auto& cell = matrix.cell(i, j);
      auto items = family.names_of(cell.singles);
      for (const auto& [s, t] : cell.pairs) items.push_back(family.cover(s).name() + "&" + family.cover(t).name());
      text[i].push_back(braces(items));
    }
  }
  return render_grid(family.universe().labels(), text);
}

std::string reducts_json(const CoverFamily& family, const ReductSet& reducts, ReductMethod method) {
  json list = json::array();
  for (const auto& r : reducts.reducts) list.push_back(names(family, r));
  json doc;
  doc["reducts"] = std::move(list);
  doc["core"] = names(family, reducts.core);
  doc["method"] = std::string(to_string(method));
  doc["degenerate"] = reducts.degenerate;
  return finish(doc);
}

std::string granules_json(const Universe& universe, const NeighborhoodMap& nmap) {
  json granules = json::object();
  for (ObjectId x = 0; x < nmap.size(); ++x) granules[universe.label(x)] = universe.labels_of(nmap.granule(x));
  json doc;
  doc["scope"] = nmap.source();
  doc["granules"] = std::move(granules);
  return finish(doc);
}

std::string approximation_json(const Universe& universe, std::string_view scope, const ApproximationPair& pair) {
  json doc;
  doc["scope"] = std::string(scope);
  doc["target"] = universe.labels_of(pair.target);
  doc["lower"] = universe.labels_of(pair.lower);
  doc["upper"] = universe.labels_of(pair.upper);
  return finish(doc);
}

}  // namespace covred
