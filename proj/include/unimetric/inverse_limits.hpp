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

#ifndef UNIMETRIC_INVERSE_LIMITS_HPP_
#define UNIMETRIC_INVERSE_LIMITS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unimetric/geometry.hpp"
#include "unimetric/maps.hpp"
#include "unimetric/metric_space.hpp"

namespace unimetric {

/// Levels X_0..X_N with bonds[i] : X_{i+1} -> X_i.
struct InverseSequenceTruncation {
  std::vector<FiniteMetricSpace> levels;
  std::vector<TotalMap> bonds;

  std::size_t top() const { return levels.size() - 1; }
};

void require_truncation(const InverseSequenceTruncation& t);

/// p^k_i : X_k -> X_i for k >= i.
TotalMap composite_bond(const InverseSequenceTruncation& t, std::size_t k, std::size_t i);

using Thread = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultLevelCap = 16;

/// Every thread, one per point of the top level, in top-level order.
std::vector<Thread> threads(const InverseSequenceTruncation& t, std::size_t cap = kDefaultLevelCap);

/// Threads under the weighted sup metric, level i weighted 2^{-(i+1)}.
FiniteMetricSpace thread_metric(const InverseSequenceTruncation& t, const std::vector<Thread>& ts);

struct MittagLefflerLevel {
  std::size_t level = 0;
  /// images[k - level] = p^k_i(X_k) for k = level..N.
  std::vector<Subset> images;
  /// Least j from which the images agree up to N; only claimed for j < N (or level = N).
  std::optional<std::size_t> stabilized_at;
};

std::vector<MittagLefflerLevel> mittag_leffler_report(const InverseSequenceTruncation& t);

struct ContainmentRow {
  Scalar epsilon;
  bool holds = false;
  /// The j (convergence) or k (Cauchy) from which the containment holds.
  std::optional<std::size_t> from;
};

struct ContainmentLevel {
  std::size_t level = 0;
  std::vector<ContainmentRow> rows;
};

struct ContainmentReport {
  std::vector<ContainmentLevel> levels;
  bool passed = true;
};

/// Per level i and epsilon: the least j0 <= N - 1 with p^j_i(X_j) inside the epsilon-neighborhood
/// of the thread projection for every j >= j0. Epsilons default to the spectrum of X_i.
ContainmentReport convergence_report(const InverseSequenceTruncation& t,
                                     const std::optional<std::vector<Scalar>>& epsilons = std::nullopt);

/// Per level i and epsilon: the least k with p^k_i(X_k) inside the epsilon-neighborhood of
/// p^j_i(X_j) for every j > k, over the nonempty levels 0..N'.
ContainmentReport cauchy_report(const InverseSequenceTruncation& t,
                                const std::optional<std::vector<Scalar>>& epsilons = std::nullopt);

struct SeparationIndex {
  std::optional<std::size_t> level;
  Scalar lambda;
};

/// Smallest i such that threads -> X_i is (eps, lambda)-separating for some lambda > 0.
SeparationIndex separation_index(const InverseSequenceTruncation& t, const Scalar& eps);

struct TelescopeResult {
  FiniteMetricSpace space;
  /// m_a = d_a and m_{i+1} = d_{i+1} + m_i(p_i, p_i): the metric each X_i carries inside.
  std::vector<FiniteMetricSpace> level_metrics;
  bool d2_equals_dinf = true;
  /// Class index of (x, 0) in X_b's slice, or of X_a's points when a = b.
  std::vector<std::size_t> top_slice;
};

TelescopeResult telescope_metric(const InverseSequenceTruncation& t, std::size_t a, std::size_t b, const Grid& grid);

struct LadderData {
  InverseSequenceTruncation x;
  InverseSequenceTruncation y;
  /// cross[i] : X_{index[i]} -> Y_i.
  std::vector<TotalMap> cross;
  /// Nondecreasing; defaults to index[i] = i.
  std::vector<std::size_t> index;
  std::optional<std::vector<Scalar>> alphas;
  std::optional<std::vector<Scalar>> betas;
};

struct HypothesisFailure {
  std::string hypothesis;  // "closeness" or "continuity"
  std::size_t level = 0;
  std::optional<std::size_t> target_level;
  std::vector<std::size_t> witness;
};

struct PerturbationResult {
  std::vector<Scalar> alphas;
  std::vector<Scalar> betas;
  /// Measured closeness of f_i p and q_i f_{i+1}.
  std::vector<Scalar> measured;
  std::optional<HypothesisFailure> failure;
  bool telescoping_ok = true;
  /// limit[x][j] = F_j(x) for every X-thread x.
  std::vector<Thread> limit;
  /// d(F_j, f_j p_j) per level.
  std::vector<Scalar> closeness;
  bool closeness_ok = true;
  bool unique = true;
  bool injective = true;
  bool hypotheses_hold() const { return !failure; }
};

PerturbationResult perturbation_limit(const LadderData& ladder);

}  // namespace unimetric

#endif  // UNIMETRIC_INVERSE_LIMITS_HPP_
