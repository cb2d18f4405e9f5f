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

#include "unimetric/embeddings.hpp"

#include <algorithm>

namespace unimetric {

AharoniEmbedding aharoni_embed(const FiniteMetricSpace& m, long depth) {
  if (depth < 1) throw PreconditionError("embedding depth must be at least 1");
  require_diameter_at_most(m, 1, "Aharoni embedding");
  AharoniEmbedding out;
  std::vector<std::map<SequencePoint::Index, Scalar>> coords(m.size());
  std::size_t offset = 0;
  out.certificate.coordinates_in_range = true;

  for (long n = 1; n <= depth; ++n) {
    const Scalar radius = pow2(-n);
    PointFiniteRefinement refined;
    try {
      // Balls of radius r/9 strongly star-refine balls of radius r/3, which do the same for radius r.
      refined = point_finite_refinement(ball_cover(m, radius), ball_cover(m, radius / 9), ball_cover(m, radius / 3));
    } catch (const PreconditionError& e) {
      throw PreconditionError("Aharoni embedding, level " + std::to_string(n) + ": " + e.what());
    }
    const Cover& d = refined.refinement;
    const LebesgueNumber leb = lebesgue_number(d, m);
    const Scalar lambda = (leb.infinite ? radius : std::min(leb.value, radius)) / 2;
    out.lambdas.push_back(lambda);
    out.offsets.push_back(offset);

    for (std::size_t i = 0; i < d.size(); ++i) {
      std::vector<bool> inside(m.size(), false);
      for (std::size_t p : d[i]) inside[p] = true;
      Subset outside;
      for (std::size_t p = 0; p < m.size(); ++p) {
        if (!inside[p]) outside.push_back(p);
      }
      for (std::size_t x = 0; x < m.size(); ++x) {
        // A member equal to M gives a constant coordinate; it is set to 0.
        auto gap = m.distance_to_set(x, outside);
        Scalar value = gap ? std::min(*gap, lambda) : Scalar(0);
        if (value < 0 || value > radius) out.certificate.coordinates_in_range = false;
        if (value != 0) coords[x][offset + i] = value;
      }
    }
    offset += d.size();
    out.refinements.push_back(d);
  }

  for (auto& c : coords) out.images.emplace_back(std::move(c), 0);

  DistanceMatrix image(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) image(x, y) = sup_distance(out.images[x], out.images[y]);
  }
  const FiniteMetricSpace image_space(m.labels(), image);
  out.certificate.continuity = continuity_modulus(m, image_space, identity_map(m.size()));

  out.certificate.injective = true;
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x + 1; y < m.size(); ++y) {
      if (image(x, y) == 0) out.certificate.injective = false;
    }
  }
  for (long n = 1; n <= depth; ++n) {
    SeparationRow row;
    row.n = n;
    row.threshold = out.lambdas[n - 1] / 2;
    row.bound = pow2(1 - n);
    for (std::size_t x = 0; x < m.size() && row.holds; ++x) {
      for (std::size_t y = x + 1; y < m.size(); ++y) {
        if (image(x, y) <= row.threshold && m(x, y) > row.bound) {
          row.holds = false;
          row.witness = std::make_pair(x, y);
          break;
        }
      }
    }
    out.certificate.separation.push_back(std::move(row));
  }
  return out;
}

SequencePoint q0_retract(const SequencePoint& x) {
  auto check = [](const Scalar& v) {
    if (v < 0 || v > 1) throw PreconditionError("q0 retraction: coordinate " + format_scalar(v) + " outside [0,1]");
  };
  check(x.tail());
  for (const auto& [i, v] : x.support()) check(v);
  const Scalar limsup = x.tail();
  return x.map_values([&](const Scalar& v) { return v < limsup ? Scalar(0) : Scalar(v - limsup); });
}

}  // namespace unimetric
