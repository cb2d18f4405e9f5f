// Copyright 2026 The unimetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unimetric/json_io.hpp"

#include <algorithm>
#include <string>

namespace unimetric {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw StructuralError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw StructuralError(std::string("field '") + key + "' must be an array");
  return v;
}

std::size_t index_from_json(const Json& j, std::size_t bound, std::string_view what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw StructuralError(std::string(what) + " must be a nonnegative integer");
  }
  const auto v = j.get<unsigned long long>();
  if (v >= bound) throw StructuralError(std::string(what) + " " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_from_json(const Json& j, std::size_t source_size,
                                                                 std::size_t target_size) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Json& p : array_field(j, "pairs")) {
    if (!p.is_array() || p.size() != 2) throw StructuralError("map pair must be [source, target]");
    out.emplace_back(index_from_json(p[0], source_size, "map source"), index_from_json(p[1], target_size, "map target"));
  }
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw StructuralError(std::string("malformed JSON: ") + e.what());
  }
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  throw StructuralError("scalar must be a \"p/q\" or decimal string");
}

Json to_json(const Scalar& s) { return format_scalar(s); }

FiniteMetricSpace space_from_json(const Json& j) {
  const Json& points = array_field(j, "points");
  const Json& rows = array_field(j, "dist");
  std::vector<std::string> labels;
  for (const Json& p : points) labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
  if (rows.size() != labels.size()) throw StructuralError("dist must have one row per point");
  DistanceMatrix dist(labels.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != labels.size()) throw StructuralError("dist must be square");
    for (std::size_t k = 0; k < labels.size(); ++k) dist(i, k) = scalar_from_json(rows[i][k]);
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

Json to_json(const FiniteMetricSpace& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"points", m.labels()}, {"dist", std::move(rows)}};
}

Subset subset_from_json(const Json& j, std::size_t ground_size) {
  if (!j.is_array()) throw StructuralError("subset must be an index array");
  Subset out;
  for (const Json& v : j) out.push_back(index_from_json(v, ground_size, "subset index"));
  if (std::adjacent_find(out.begin(), out.end(), std::greater_equal<>()) != out.end()) {
    throw StructuralError("subset indices must be strictly increasing");
  }
  return out;
}

Json subset_to_json(const Subset& s) { return Json(s); }

TotalMap map_from_json(const Json& j, std::size_t source_size, std::size_t target_size) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  TotalMap f(source_size, kUnset);
  for (const auto& [a, b] : pairs_from_json(j, source_size, target_size)) {
    if (f[a] != kUnset) throw StructuralError("map assigns source " + std::to_string(a) + " twice");
    f[a] = b;
  }
  if (std::find(f.begin(), f.end(), kUnset) != f.end()) throw StructuralError("map is not total");
  return f;
}

PartialMap partial_map_from_json(const Json& j, std::size_t source_size, std::size_t target_size) {
  auto pairs = pairs_from_json(j, source_size, target_size);
  std::sort(pairs.begin(), pairs.end());
  PartialMap f;
  for (const auto& [a, b] : pairs) {
    if (!f.domain.empty() && f.domain.back() == a) throw StructuralError("map assigns source " + std::to_string(a) + " twice");
    f.domain.push_back(a);
    f.assignment.push_back(b);
  }
  require_partial(f, source_size, target_size);
  return f;
}

Json map_to_json(const TotalMap& f) {
  Json pairs = Json::array();
  for (std::size_t a = 0; a < f.size(); ++a) pairs.push_back({a, f[a]});
  return Json{{"pairs", std::move(pairs)}};
}

Cover cover_from_json(const Json& j) {
  const std::size_t ground = index_from_json(field(j, "ground"), static_cast<std::size_t>(-1), "ground");
  std::vector<Subset> sets;
  for (const Json& s : array_field(j, "sets")) sets.push_back(subset_from_json(s, ground));
  return Cover(ground, std::move(sets));
}

Json to_json(const Cover& c) {
  Json sets = Json::array();
  for (const Subset& s : c.sets()) sets.push_back(subset_to_json(s));
  return Json{{"ground", c.ground_size()}, {"sets", std::move(sets)}};
}

FundamentalSequence fundamental_sequence_from_json(const Json& j) {
  FundamentalSequence seq;
  for (const Json& c : array_field(j, "covers")) seq.covers.push_back(cover_from_json(c));
  if (seq.covers.empty()) throw StructuralError("fundamental sequence needs at least one cover");
  seq.ground_size = seq.covers.front().ground_size();
  for (const Cover& c : seq.covers) {
    if (c.ground_size() != seq.ground_size) throw StructuralError("covers disagree on the ground size");
  }
  if (j.contains("points")) {
    for (const Json& p : j.at("points")) seq.labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
    if (seq.labels.size() != seq.ground_size) throw StructuralError("points must match the ground size");
  }
  return seq;
}

Surjection surjection_from_json(const Json& j, std::size_t source_size) {
  const Json& classes = array_field(j, "class_of");
  if (classes.size() != source_size) throw StructuralError("class_of needs one entry per point");
  Surjection f;
  for (const Json& c : classes) {
    f.class_of.push_back(index_from_json(c, source_size, "class index"));
    f.class_count = std::max(f.class_count, f.class_of.back() + 1);
  }
  require_surjection(f, source_size);
  return f;
}

NormedPointSet point_set_from_json(const Json& j) {
  NormedPointSet s;
  s.dim = index_from_json(field(j, "dim"), static_cast<std::size_t>(-1), "dim");
  const Json& norm = field(j, "norm");
  if (norm == "sup") {
    s.norm = Norm::kSup;
  } else if (norm == "l1") {
    s.norm = Norm::kL1;
  } else {
    throw StructuralError("norm must be \"sup\" or \"l1\"");
  }
  for (const Json& p : array_field(j, "points")) {
    if (!p.is_array() || p.size() != s.dim) throw StructuralError("point has the wrong dimension");
    std::vector<Scalar> v;
    for (const Json& c : p) v.push_back(scalar_from_json(c));
    s.points.push_back(std::move(v));
  }
  return s;
}

Json to_json(const NormedPointSet& s) {
  Json points = Json::array();
  for (const auto& p : s.points) {
    Json row = Json::array();
    for (const Scalar& c : p) row.push_back(to_json(c));
    points.push_back(std::move(row));
  }
  return Json{{"dim", s.dim}, {"points", std::move(points)}, {"norm", s.norm == Norm::kSup ? "sup" : "l1"}};
}

Grid grid_from_json(const Json& j) {
  if (!j.is_array()) throw StructuralError("grid must be an array");
  Grid g;
  for (const Json& v : j) g.push_back(scalar_from_json(v));
  return g;
}

Grid grid_from_csv(std::string_view csv) {
  Grid g;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    g.push_back(parse_scalar(csv.substr(start, comma - start)));
    start = comma + 1;
  }
  return g;
}

SequencePoint sequence_point_from_json(const Json& j) {
  std::map<SequencePoint::Index, Scalar> support;
  const Json& s = field(j, "support");
  if (!s.is_object()) throw StructuralError("support must be an object");
  for (const auto& [key, value] : s.items()) {
    if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw StructuralError("support keys must be coordinate indices");
    }
    support[std::stoull(key)] = scalar_from_json(value);
  }
  return SequencePoint(std::move(support), j.contains("tail") ? scalar_from_json(j.at("tail")) : Scalar(0));
}

Json to_json(const SequencePoint& p) {
  Json support = Json::object();
  for (const auto& [i, v] : p.support()) support[std::to_string(i)] = to_json(v);
  return Json{{"support", std::move(support)}, {"tail", to_json(p.tail())}};
}

Cubohedron cubohedron_from_json(const Json& j) {
  const Json& level = field(j, "level");
  if (!level.is_number_integer()) throw StructuralError("level must be an integer");
  std::vector<Cube> cubes;
  for (const Json& c : array_field(j, "cubes")) {
    Cube cube;
    const SequencePoint base = sequence_point_from_json(Json{{"support", field(c, "base")}});
    for (const auto& [i, v] : base.support()) cube.base[i] = v;
    for (const Json& e : array_field(c, "extent")) {
      cube.extent.push_back(index_from_json(e, static_cast<std::size_t>(-1), "extent index"));
    }
    std::sort(cube.extent.begin(), cube.extent.end());
    cubes.push_back(std::move(cube));
  }
  return Cubohedron(level.get<long>(), cubes);
}

Json to_json(const Cubohedron& k) {
  Json cubes = Json::array();
  for (const Cube& c : k.cubes()) {
    Json base = Json::object();
    for (const auto& [i, v] : c.base) base[std::to_string(i)] = to_json(v);
    cubes.push_back(Json{{"base", std::move(base)}, {"extent", c.extent}});
  }
  return Json{{"level", k.level()}, {"cubes", std::move(cubes)}};
}

InverseSequenceTruncation truncation_from_json(const Json& j) {
  InverseSequenceTruncation t;
  for (const Json& l : array_field(j, "levels")) t.levels.push_back(space_from_json(l));
  const Json& bonds = array_field(j, "bonds");
  if (t.levels.empty() || bonds.size() + 1 != t.levels.size()) {
    throw StructuralError("truncation needs levels and one bond per adjacent pair");
  }
  for (std::size_t i = 0; i < bonds.size(); ++i) {
    t.bonds.push_back(map_from_json(bonds[i], t.levels[i + 1].size(), t.levels[i].size()));
  }
  return t;
}

LadderData ladder_from_json(const Json& j) {
  LadderData l;
  l.x = truncation_from_json(field(j, "x"));
  l.y = truncation_from_json(field(j, "y"));
  if (j.contains("index")) {
    for (const Json& v : j.at("index")) l.index.push_back(index_from_json(v, l.x.levels.size(), "ladder index"));
  }
  const Json& cross = array_field(j, "cross");
  if (cross.size() != l.y.levels.size()) throw StructuralError("ladder needs one cross map per Y level");
  for (std::size_t i = 0; i < cross.size(); ++i) {
    const std::size_t src = l.index.empty() ? i : l.index.at(i);
    if (src >= l.x.levels.size()) throw StructuralError("ladder cross map source level out of range");
    l.cross.push_back(map_from_json(cross[i], l.x.levels[src].size(), l.y.levels[i].size()));
  }
  auto scalars = [&](const char* key) -> std::optional<std::vector<Scalar>> {
    if (!j.contains(key)) return std::nullopt;
    std::vector<Scalar> v;
    for (const Json& s : array_field(j, key)) v.push_back(scalar_from_json(s));
    return v;
  };
  l.alphas = scalars("alphas");
  l.betas = scalars("betas");
  return l;
}

}  // namespace unimetric
