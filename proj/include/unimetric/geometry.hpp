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

#ifndef UNIMETRIC_GEOMETRY_HPP_
#define UNIMETRIC_GEOMETRY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unimetric/maps.hpp"
#include "unimetric/metric_space.hpp"
#include "unimetric/quotient.hpp"

namespace unimetric {

using Grid = std::vector<Scalar>;

/// Throws unless `grid` is strictly increasing, lies in [lo, hi] and contains both ends.
void require_grid(const Grid& grid, const Scalar& lo, const Scalar& hi, std::string_view what);

// ---- cone ----

/// Points (x, t) for t < 1, x-major in grid order, then the vertex.
struct ConeLayout {
  std::size_t base_size = 0;
  std::size_t levels = 0;  // grid points below 1
  std::size_t index(std::size_t x, std::size_t level) const { return x * levels + level; }
  std::size_t vertex() const { return base_size * levels; }
};

ConeLayout cone_layout(const FiniteMetricSpace& base, const Grid& grid);

/// d((x,t),(x',t')) = min{d(x,x') + |t - t'|, (1 - t) + (1 - t')}.
FiniteMetricSpace cone_metric(const FiniteMetricSpace& base, const Grid& grid);

// ---- join ----

/// A join class: at t = -1 only x is kept, at t = 1 only y.
struct JoinPoint {
  std::optional<std::size_t> x;
  std::optional<std::size_t> y;
  Scalar t;
};

/// Classes: [x] for t = -1, then (x, y, t) x-major, y, then t, then [y] for t = 1.
std::vector<JoinPoint> join_points(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Grid& grid);

/// The four-chain minimum.
Scalar join_distance(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const JoinPoint& p, const JoinPoint& q);

FiniteMetricSpace join_metric(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Grid& grid);

struct JoinAmalgamReport {
  bool equal = false;
  Scalar max_discrepancy;
  /// The glued space, with each of its classes matched to a join class.
  FiniteMetricSpace amalgam;
  std::vector<std::size_t> join_class;
};

/// Glues CX x Y and X x CY along X x Y x {0} and compares with the join metric.
JoinAmalgamReport join_amalgam_equality(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Grid& grid);

// ---- Euclidean cone ----

/// sqrt(t^2 + s^2 - 2 t s cos d).
double euclidean_cone_distance(double d, double t, double s);

/// Classes: the apex (when 0 is in the grid), then (x, t) for t > 0, x-major.
std::vector<std::vector<double>> euclidean_cone_metric(const FiniteMetricSpace& base, const Grid& grid);

// ---- rectilinear cone and join ----

enum class Norm { kSup, kL1 };

struct NormedPointSet {
  std::size_t dim = 0;
  std::vector<std::vector<Scalar>> points;
  Norm norm = Norm::kSup;
};

Scalar norm_of(std::span<const Scalar> v, Norm norm);
Scalar norm_distance(std::span<const Scalar> a, std::span<const Scalar> b, Norm norm);

/// The point ((1 - t) x, t) of the segment from (x, 0) to the apex (0, 1).
std::vector<Scalar> rectilinear_cone_point(std::span<const Scalar> x, const Scalar& t);

/// Points ((1 - t) x, t) for x in S and t in `grid` below 1, then the apex; sup-norm on V x R.
NormedPointSet rectilinear_cone(const NormedPointSet& s, const Grid& grid);

/// Points ((1 - u) x, u y, 2u - 1) on the segments from (x, 0, -1) to (0, y, 1); repeated points dropped.
NormedPointSet independent_rectilinear_join(const NormedPointSet& s, const NormedPointSet& t, const Grid& grid);

struct ConeSample {
  std::size_t x = 0;
  double t = 0;  // Euclidean-cone level; 0 is the apex
  std::size_t y = 0;
  double s = 0;
};

struct ConeComparison {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double max_e_over_s = 0;
  double max_s_over_e = 0;
  std::optional<ConeSample> first_violation;
};

inline constexpr double kConeTolerance = 1e-9;

/// For each sample, S = sup-norm distance of (t x, 1 - t) and (s y, 1 - s), E = Euclidean-cone
/// distance with d = ||x - y||; counts samples violating E <= 3S or S <= 5E.
ConeComparison cone_comparison_bounds(const NormedPointSet& x, const std::vector<ConeSample>& samples,
                                      double tolerance = kConeTolerance);

// ---- mapping cylinder ----

/// Points (x, t) for t < 1, x-major, then the points of Y.
struct CylinderLayout {
  std::size_t x_size = 0;
  std::size_t levels = 0;
  std::size_t index(std::size_t x, std::size_t level) const { return x * levels + level; }
  std::size_t y_index(std::size_t y) const { return x_size * levels + y; }
};

struct CylinderResult {
  FiniteMetricSpace space;
  CylinderLayout layout;
  /// d_X + d_Y(f, f): the metric actually used on X.
  FiniteMetricSpace adjusted_x;
  /// The formulas agree with d_3 of the adjunction of X x I along X x {1}.
  bool matches_adjunction = false;
};

CylinderResult mapping_cylinder_metric(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const TotalMap& f,
                                       const Grid& grid, bool certify = true);

/// MC(f|A) equals the restriction of MC(f) to A x I together with Y.
bool subcylinder_property(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const TotalMap& f, const Grid& grid,
                          const Subset& a);

// ---- uniform modulus ----

struct UniformModulus {
  std::vector<Scalar> delta;
  /// -1 for members of U_0, else the n with p in U_{n+1} \ U_n.
  std::vector<long> band;
  bool all_continuous = false;
  bool lipschitz = false;
  std::optional<std::pair<std::size_t, std::size_t>> lipschitz_witness;
};

UniformModulus uniform_modulus(const FiniteMetricSpace& source, const FiniteMetricSpace& target,
                               const std::vector<TotalMap>& family, const Scalar& eps);

}  // namespace unimetric

#endif  // UNIMETRIC_GEOMETRY_HPP_
