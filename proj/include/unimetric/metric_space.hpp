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

#ifndef UNIMETRIC_METRIC_SPACE_HPP_
#define UNIMETRIC_METRIC_SPACE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unimetric/scalar.hpp"
#include "unimetric/sequence_point.hpp"

namespace unimetric {

/// Ordered list of point indices into some ground set.
using Subset = std::vector<std::size_t>;

/// Labeled finite point set with an exact distance matrix. The constructor
/// only checks shape; use check_metric_axioms to audit the axioms.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> labels, DistanceMatrix dist);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const DistanceMatrix& matrix() const { return dist_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return dist_(i, j); }

  /// Largest distance; 0 for spaces with fewer than two points.
  Scalar diameter() const;
  /// Sorted distinct positive off-diagonal distances.
  std::vector<Scalar> spectrum() const;
  /// Smallest positive distance, if any.
  std::optional<Scalar> min_positive_distance() const;
  /// Induced subspace on `subset`, in the order given.
  FiniteMetricSpace restrict_to(std::span<const std::size_t> subset) const;
  /// min over s in `subset` of d(x, s); nullopt when `subset` is empty.
  std::optional<Scalar> distance_to_set(std::size_t x, std::span<const std::size_t> subset) const;

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.labels_ == b.labels_ && a.dist_ == b.dist_;
  }

 private:
  std::vector<std::string> labels_;
  DistanceMatrix dist_;
};

/// Builds a space from a list of rows; convenient for fixtures.
FiniteMetricSpace make_space(std::vector<std::string> labels, const std::vector<std::vector<Scalar>>& rows);
/// Points 0..n-1 labeled by index with the given rows.
FiniteMetricSpace make_space(const std::vector<std::vector<Scalar>>& rows);

struct AxiomViolation {
  std::string axiom;  // zero_diagonal | symmetry | nonnegativity | positivity | triangle
  std::vector<std::size_t> witness;
  Scalar lhs;
  Scalar rhs;
};

struct AxiomReport {
  bool passed = true;
  /// At most one violation per axiom: the lexicographically smallest witness.
  std::vector<AxiomViolation> violations;
  /// Total number of violating tuples per reported axiom, same order.
  std::vector<std::size_t> violation_counts;
};

/// Audits zero diagonal, symmetry, nonnegativity, positivity (unless
/// `allow_pseudo`) and the triangle inequality d(i,k) <= d(i,j) + d(j,k).
AxiomReport check_metric_axioms(const FiniteMetricSpace& space, bool allow_pseudo = false);

enum class ProductNorm { kL1, kL2Squared, kLinf };

/// Cartesian product, points ordered (m, n) row-major. kL2Squared returns the
/// squared l2 distance so the result stays rational; it is not a metric.
FiniteMetricSpace product_metric(const FiniteMetricSpace& m, const FiniteMetricSpace& n, ProductNorm norm);

/// Disjoint union with constant cross distance `cross`. The result is a metric
/// iff both diameters are at most 2*cross; with the default cross = 1 both
/// diameters must be at most 1, matching the standard disjoint-union metric.
FiniteMetricSpace disjoint_union_metric(const FiniteMetricSpace& m, const FiniteMetricSpace& n,
                                        const Scalar& cross = 1);

/// Cross distance large enough that no chain through it is ever shorter than
/// a chain through glued points: diam(m) + diam(n) + 1.
Scalar isolating_cross_distance(const FiniteMetricSpace& m, const FiniteMetricSpace& n);

/// sup_i 2^{-i} d_i(a_i, b_i) with levels indexed from i = 1.
Scalar weighted_sup_distance(std::span<const FiniteMetricSpace> levels, std::span<const std::size_t> a,
                             std::span<const std::size_t> b);

/// Weighted sup metric on all tuples (row-major order). Each level needs diam <= 1.
FiniteMetricSpace weighted_sup_metric(std::span<const FiniteMetricSpace> levels);
/// Same metric restricted to the listed tuples.
FiniteMetricSpace weighted_sup_metric(std::span<const FiniteMetricSpace> levels,
                                      const std::vector<std::vector<std::size_t>>& tuples,
                                      std::vector<std::string> labels = {});

/// Hausdorff distance between nonempty subsets.
Scalar hausdorff_distance(const FiniteMetricSpace& m, std::span<const std::size_t> a, std::span<const std::size_t> b);

inline constexpr std::size_t kDefaultHyperspaceCap = 12;

/// All nonempty subsets (ordered by bitmask 1..2^n-1) with min(d_H, 1).
FiniteMetricSpace hausdorff_hyperspace(const FiniteMetricSpace& m, std::size_t cap = kDefaultHyperspaceCap);

/// Nonempty subset encoded by hausdorff_hyperspace point index `k`.
Subset hyperspace_subset(std::size_t k, std::size_t ground_size);

/// x -> (d(x,p))_p, isometric into sup-norm sequences. Requires diam <= 1.
std::vector<SequencePoint> kuratowski_embed(const FiniteMetricSpace& m);

/// McShane extension x -> min_a g(a) + L d(x,a) of an L-Lipschitz g on `domain`.
/// `values[k]` is g(domain[k]).
std::vector<Scalar> mcshane_extend(const FiniteMetricSpace& x, std::span<const std::size_t> domain,
                                   std::span<const Scalar> values, const Scalar& lipschitz);

/// Extends the metric `on_subset` (indexed like `subset`) to all of `x`.
/// The result is the sup pairing of the coordinatewise McShane extension of
/// the Kuratowski embedding of (subset, on_subset) with min(d_2, 1) of the
/// quotient x/subset. Requires diam(on_subset) <= 1.
FiniteMetricSpace extend_metric(const FiniteMetricSpace& x, std::span<const std::size_t> subset,
                                const FiniteMetricSpace& on_subset);

/// Multiplies every distance by `factor` (> 0).
FiniteMetricSpace rescale(const FiniteMetricSpace& m, const Scalar& factor);
/// Scales down so the diameter is at most `bound`; identity if already so.
FiniteMetricSpace rescale_to_diameter(const FiniteMetricSpace& m, const Scalar& bound);
/// min(d, cap) on every pair; a metric whenever d is.
FiniteMetricSpace truncate(const FiniteMetricSpace& m, const Scalar& cap);

/// Floating-point copy of the matrix; `square_root` undoes the squared l2 product.
std::vector<std::vector<double>> float_view(const FiniteMetricSpace& m, bool square_root = false);

/// Throws PreconditionError naming a pair at distance > bound.
void require_diameter_at_most(const FiniteMetricSpace& m, const Scalar& bound, std::string_view what);

/// All-pairs shortest paths (Floyd-Warshall) of a weight matrix.
DistanceMatrix shortest_paths(DistanceMatrix weights);

}  // namespace unimetric

#endif  // UNIMETRIC_METRIC_SPACE_HPP_
