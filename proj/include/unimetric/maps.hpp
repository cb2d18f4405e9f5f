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

#ifndef UNIMETRIC_MAPS_HPP_
#define UNIMETRIC_MAPS_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "unimetric/metric_space.hpp"

namespace unimetric {

/// Total map between finite spaces: image index of each source point.
using TotalMap = std::vector<std::size_t>;

/// A map defined on a subset of the source space.
struct PartialMap {
  Subset domain;
  /// assignment[k] is the image of domain[k].
  std::vector<std::size_t> assignment;

  std::optional<std::size_t> image_of(std::size_t point) const;
};

/// Throws StructuralError unless `f` maps every source point into the target.
void require_total(const TotalMap& f, std::size_t source_size, std::size_t target_size);
void require_partial(const PartialMap& f, std::size_t source_size, std::size_t target_size);

struct ModulusRow {
  Scalar delta;
  Scalar epsilon;
};

/// Rows sorted by delta ascending, epsilon nondecreasing.
/// Continuity rows read "delta-close points go to epsilon-close points".
/// Separation rows read "delta-close images have epsilon-close preimages";
/// epsilons for which no delta works are listed in `unattained`.
struct ModulusTable {
  std::vector<ModulusRow> rows;
  std::vector<Scalar> unattained;
};

/// True when d(x,y) <= delta implies d(f x, f y) <= epsilon.
bool is_continuous_at(const FiniteMetricSpace& source, const FiniteMetricSpace& target, const TotalMap& f,
                      const Scalar& delta, const Scalar& epsilon);

/// True when d(f x, f y) <= delta implies d(x, y) <= epsilon.
bool is_separating_at(const FiniteMetricSpace& source, const FiniteMetricSpace& target, const TotalMap& f,
                      const Scalar& epsilon, const Scalar& delta);

/// One row per positive source distance delta, epsilon = max image distance
/// over pairs at distance <= delta.
ModulusTable continuity_modulus(const FiniteMetricSpace& source, const FiniteMetricSpace& target, const TotalMap& f);

/// For each epsilon in {0} U spectrum(source): the largest delta in
/// {0} U spectrum(target) such that image pairs at distance <= delta have
/// preimage pairs at distance <= epsilon.
ModulusTable separation_modulus(const FiniteMetricSpace& source, const FiniteMetricSpace& target, const TotalMap& f);

/// sup_x d(f x, g x) for maps into the same target.
Scalar map_distance(const FiniteMetricSpace& target, const TotalMap& f, const TotalMap& g);

TotalMap compose(const TotalMap& outer, const TotalMap& inner);
TotalMap identity_map(std::size_t n);

}  // namespace unimetric

#endif  // UNIMETRIC_MAPS_HPP_
