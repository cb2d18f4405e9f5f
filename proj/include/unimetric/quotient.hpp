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

#ifndef UNIMETRIC_QUOTIENT_HPP_
#define UNIMETRIC_QUOTIENT_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "unimetric/maps.hpp"
#include "unimetric/metric_space.hpp"

namespace unimetric {

/// A set map onto {0, ..., class_count - 1}.
struct Surjection {
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;

  /// Points of each class, in increasing order.
  std::vector<Subset> classes() const;
};

/// Throws unless `f` is defined on every source point and hits every class.
void require_surjection(const Surjection& f, std::size_t source_size);

/// Labels of the classes: the point label for a singleton, "[a,b,...]" otherwise.
std::vector<std::string> class_labels(const FiniteMetricSpace& m, const Surjection& f);

/// Entry (a, b) is the distance between the preimages of a and b.
DistanceMatrix block_distance(const FiniteMetricSpace& m, const Surjection& f);

/// Min-plus closure of `block` over chains with at most `segments` steps.
///
/// Chains of classes and chains of points give the same infimum: a point chain
/// x_0, ..., x_n that hops inside a class between segments costs exactly the
/// sum of block distances of the class chain it visits, and conversely each
/// block distance is attained by some pair of preimage points.
DistanceMatrix chain_closure(const DistanceMatrix& block, std::size_t segments);

struct ChainMetric {
  /// Chain length; nullopt stands for infinity.
  std::optional<std::size_t> n;
  DistanceMatrix values;
  /// d_infinity by Floyd-Warshall on the block distances.
  DistanceMatrix d_infinity;
  bool is_metric = false;
  bool equals_dinf = false;
  /// Lexicographically smallest (i, j, k) with values(i,k) > values(i,j) + values(j,k).
  std::optional<std::vector<std::size_t>> triangle_witness;
  /// Lexicographically smallest pair of distinct classes at distance zero.
  std::optional<std::pair<std::size_t, std::size_t>> positivity_witness;
};

ChainMetric chain_metric(const FiniteMetricSpace& m, const Surjection& f, std::optional<std::size_t> n);

/// The quotient space (Q, d_n) with class labels.
FiniteMetricSpace chain_quotient(const FiniteMetricSpace& m, const Surjection& f, const ChainMetric& chain);

/// Rows (delta, epsilon) with delta over the d_infinity spectrum and epsilon the
/// largest d_n over class pairs at d_infinity distance at most delta.
ModulusTable quotient_order_modulus(const FiniteMetricSpace& m, const Surjection& f, std::size_t n);

struct QuotientResult {
  Surjection surjection;
  FiniteMetricSpace space;
  bool d2_equals_dinf = false;
  bool is_metric = false;
};

/// Collapses each member of `family` to a point and metrizes by d_2.
QuotientResult quotient_by_discrete_family(const FiniteMetricSpace& x, const std::vector<Subset>& family);

struct AmalgamResult {
  /// Classes: the points of X in order, then the points of Y outside B.
  FiniteMetricSpace space;
  Surjection surjection;
  bool d2_equals_dinf = false;
  bool is_metric = false;
  bool x_isometric = false;
  bool y_isometric = false;
};

/// Glues X and Y along a[k] ~ b[k]; the pairing must be an isometry.
AmalgamResult amalgamated_union(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Subset& a,
                                const Subset& b, const Scalar& cross = 1);

struct AdjunctionResult {
  /// Classes: [y] for every y in Y in order, then {x} for x outside A in order.
  FiniteMetricSpace space;
  /// The metric on X followed by Y before identification.
  FiniteMetricSpace disjoint;
  Surjection surjection;
  DistanceMatrix d_infinity;
  bool d3_equals_dinf = false;
  bool is_metric = false;
  bool y_isometric = false;
  /// d_inf(x, [y]) >= d(x, A) > 0 for x outside A.
  bool separated_from_y = false;
  std::optional<std::pair<std::size_t, std::size_t>> separation_witness;
};

/// Runs the full pipeline: adjust the metric on A, extend it over X, glue at cross distance 1.
AdjunctionResult adjunction_space(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const PartialMap& f);

/// Glues with a metric on X already chosen so that f is 1-Lipschitz.
AdjunctionResult adjunction_with_metric(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const PartialMap& f,
                                        const Scalar& cross);

}  // namespace unimetric

#endif  // UNIMETRIC_QUOTIENT_HPP_
