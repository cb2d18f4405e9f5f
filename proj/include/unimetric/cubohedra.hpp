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

#ifndef UNIMETRIC_CUBOHEDRA_HPP_
#define UNIMETRIC_CUBOHEDRA_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "unimetric/scalar.hpp"
#include "unimetric/sequence_point.hpp"

namespace unimetric {

/// H_t(s) = max{0, 1 - (1 - s)(1 + t)}.
Scalar contraction_profile(const Scalar& s, const Scalar& t);

/// G_t(x) = [x] + g_t(x - [x]) with g_t(u) = sign(u) H_t(2|u|) / 2 and [x] the nearest
/// integer, the smaller one on ties.
Scalar lattice_retraction(const Scalar& x, const Scalar& t);

/// Coordinatewise 2^{-n} G_t(2^n x).
SequencePoint lattice_homotopy(const SequencePoint& x, const Scalar& t, long n);

/// Coordinatewise H_t on [0, 1]-valued points.
SequencePoint tail_contraction(const SequencePoint& x, const Scalar& t);

/// The product of [b_i, b_i + 2^{-n}] over the extent and {b_i} elsewhere.
struct Cube {
  /// Lattice vertex with finite support; zero coordinates are omitted.
  std::map<SequencePoint::Index, Scalar> base;
  /// Sorted coordinates along which the cube has positive length.
  std::vector<SequencePoint::Index> extent;

  friend bool operator==(const Cube&, const Cube&) = default;
  friend bool operator<(const Cube& a, const Cube& b) {
    if (a.extent.size() != b.extent.size()) return a.extent.size() < b.extent.size();
    if (a.extent != b.extent) return a.extent < b.extent;
    return a.base < b.base;
  }
};

/// A face-closed set of cubes of the lattice with edge 2^{-level}.
class Cubohedron {
 public:
  Cubohedron() = default;
  /// Adds every face of every listed cube.
  Cubohedron(long level, const std::vector<Cube>& cubes);

  long level() const { return level_; }
  const std::vector<Cube>& cubes() const { return cubes_; }
  bool contains(const Cube& c) const;
  /// Cubes that are faces of no other cube.
  std::vector<Cube> maximal_cubes() const;

 private:
  long level_ = 0;
  std::vector<Cube> cubes_;  // sorted
};

/// Throws unless the base lies on the lattice of edge 2^{-level}.
void require_lattice_cube(const Cube& c, long level);

/// All 3^|extent| faces, the cube itself included.
std::vector<Cube> faces(const Cube& c, long level);

/// The smallest cube containing x; x must have finite support (tail 0).
Cube carrier(const SequencePoint& x, long level);

/// Exact sup-norm distance from x to the cube.
Scalar distance_to_cube(const SequencePoint& x, const Cube& c, long level);
Scalar distance_to_complex(const SequencePoint& x, const Cubohedron& k);

bool cube_contains(const Cube& c, const SequencePoint& x, long level);
bool subcomplex_membership(const SequencePoint& x, const Cubohedron& k);

Cubohedron minimal_enclosing_subcomplex(const std::vector<SequencePoint>& points, long level);

struct RetractReport {
  std::size_t samples = 0;
  /// Samples within 2^{-n-2} of K; only these carry a guarantee.
  std::size_t in_band = 0;
  std::size_t landed = 0;
  std::size_t outside_band_landed = 0;
  std::optional<std::size_t> first_failure;
  bool passed() const { return landed == in_band; }
};

/// For samples within 2^{-n-2} of K, checks that lattice_homotopy(x, 1, n) lies in K.
RetractReport neighborhood_retract_check(const Cubohedron& k, const std::vector<SequencePoint>& samples, long n);

}  // namespace unimetric

#endif  // UNIMETRIC_CUBOHEDRA_HPP_
