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

#include "unimetric/maps.hpp"

#include <algorithm>

namespace unimetric {

std::optional<std::size_t> PartialMap::image_of(std::size_t point) const {
  for (std::size_t k = 0; k < domain.size(); ++k) {
    if (domain[k] == point) return assignment[k];
  }
  return std::nullopt;
}

void require_total(const TotalMap& f, std::size_t source_size, std::size_t target_size) {
  if (f.size() != source_size) {
    throw StructuralError("map has " + std::to_string(f.size()) + " entries for " + std::to_string(source_size) +
                          " source points");
  }
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= target_size) throw StructuralError("map sends point " + std::to_string(x) + " outside the target");
  }
}

void require_partial(const PartialMap& f, std::size_t source_size, std::size_t target_size) {
  if (f.domain.size() != f.assignment.size()) throw StructuralError("partial map: domain and assignment differ in size");
  std::vector<bool> seen(source_size, false);
  for (std::size_t k = 0; k < f.domain.size(); ++k) {
    if (f.domain[k] >= source_size) throw StructuralError("partial map: domain index out of range");
    if (seen[f.domain[k]]) throw StructuralError("partial map: repeated domain point");
    seen[f.domain[k]] = true;
    if (f.assignment[k] >= target_size) throw StructuralError("partial map: image index out of range");
  }
}

bool is_continuous_at(const FiniteMetricSpace& source, const FiniteMetricSpace& target, const TotalMap& f,
                      const Scalar& delta, const Scalar& epsilon) {
  for (std::size_t x = 0; x < source.size(); ++x) {
    for (std::size_t y = x + 1; y < source.size(); ++y) {
      if (source(x, y) <= delta && target(f[x], f[y]) > epsilon) return false;
    }
  }
  return true;
}

bool is_separating_at(const FiniteMetricSpace& source, const FiniteMetricSpace& target, const TotalMap& f,
                      const Scalar& epsilon, const Scalar& delta) {
  for (std::size_t x = 0; x < source.size(); ++x) {
    for (std::size_t y = x + 1; y < source.size(); ++y) {
      if (target(f[x], f[y]) <= delta && source(x, y) > epsilon) return false;
    }
  }
  return true;
}

ModulusTable continuity_modulus(const FiniteMetricSpace& source, const FiniteMetricSpace& target, const TotalMap& f) {
  require_total(f, source.size(), target.size());
  ModulusTable table;
  for (const Scalar& delta : source.spectrum()) {
    Scalar eps = 0;
    for (std::size_t x = 0; x < source.size(); ++x) {
      for (std::size_t y = x + 1; y < source.size(); ++y) {
        if (source(x, y) <= delta) eps = std::max(eps, target(f[x], f[y]));
      }
    }
    table.rows.push_back({delta, eps});
  }
  return table;
}

ModulusTable separation_modulus(const FiniteMetricSpace& source, const FiniteMetricSpace& target, const TotalMap& f) {
  require_total(f, source.size(), target.size());
  std::vector<Scalar> epsilons{0};
  for (const Scalar& s : source.spectrum()) epsilons.push_back(s);
  std::vector<Scalar> deltas{0};
  for (const Scalar& s : target.spectrum()) deltas.push_back(s);

  ModulusTable table;
  for (const Scalar& eps : epsilons) {
    // The smallest image distance of a pair that is more than eps apart caps delta from above.
    std::optional<Scalar> cap;
    for (std::size_t x = 0; x < source.size(); ++x) {
      for (std::size_t y = x + 1; y < source.size(); ++y) {
        if (source(x, y) > eps && (!cap || target(f[x], f[y]) < *cap)) cap = target(f[x], f[y]);
      }
    }
    std::optional<Scalar> best;
    for (const Scalar& delta : deltas) {
      if (!cap || delta < *cap) best = delta;
    }
    if (best) {
      table.rows.push_back({*best, eps});
    } else {
      table.unattained.push_back(eps);
    }
  }
  return table;
}

Scalar map_distance(const FiniteMetricSpace& target, const TotalMap& f, const TotalMap& g) {
  if (f.size() != g.size()) throw StructuralError("map_distance: maps have different domains");
  Scalar best = 0;
  for (std::size_t x = 0; x < f.size(); ++x) best = std::max(best, target(f[x], g[x]));
  return best;
}

TotalMap compose(const TotalMap& outer, const TotalMap& inner) {
  TotalMap out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) {
    if (inner[x] >= outer.size()) throw StructuralError("compose: inner map leaves the outer domain");
    out[x] = outer[inner[x]];
  }
  return out;
}

TotalMap identity_map(std::size_t n) {
  TotalMap out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = x;
  return out;
}

}  // namespace unimetric
