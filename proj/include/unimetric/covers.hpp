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

#ifndef UNIMETRIC_COVERS_HPP_
#define UNIMETRIC_COVERS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unimetric/metric_space.hpp"

namespace unimetric {

/// A finite family of nonempty subsets whose union is {0, ..., ground_size - 1}.
/// Members are stored sorted; repeated members are dropped, keeping the first.
class Cover {
 public:
  Cover() = default;
  Cover(std::size_t ground_size, std::vector<Subset> sets);

  std::size_t ground_size() const { return ground_size_; }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  const Subset& operator[](std::size_t i) const { return sets_[i]; }

  friend bool operator==(const Cover& a, const Cover& b) {
    return a.ground_size_ == b.ground_size_ && a.sets_ == b.sets_;
  }

 private:
  std::size_t ground_size_ = 0;
  std::vector<Subset> sets_;
};

struct RefinementVerdict {
  bool holds = true;
  /// The offending set (or point or pair) when `holds` is false.
  std::optional<Subset> witness;
  std::string reason;
};

bool contains_all(const Subset& outer, const Subset& inner);
bool intersects(const Subset& a, const Subset& b);

RefinementVerdict refines(const Cover& c, const Cover& d);

/// Union of the members of `c` that meet `t`.
Subset star(const Subset& t, const Cover& c);

/// {st({x}, C)} refines D.
RefinementVerdict star_refines(const Cover& c, const Cover& d);
/// {st(U, C) | U in C} refines D.
RefinementVerdict strong_star_refines(const Cover& c, const Cover& d);

Cover meet(const Cover& c, const Cover& d);

/// Closed balls {y : d(x, y) <= r}, one per point.
Cover ball_cover(const FiniteMetricSpace& m, const Scalar& r);

/// All maximal cliques of the graph whose edges are the pairs (i, j) with adjacent[i][j].
std::vector<Subset> maximal_cliques(const std::vector<std::vector<bool>>& adjacent);

/// Lebesgue number; `infinite` when the whole space lies in one member.
struct LebesgueNumber {
  bool infinite = false;
  Scalar value;
};

LebesgueNumber lebesgue_number(const Cover& c, const FiniteMetricSpace& m);

/// Every set of diameter at most r lies in some member of `c`.
RefinementVerdict diameter_sets_refine(const FiniteMetricSpace& m, const Scalar& r, const Cover& c);

std::size_t multiplicity(const Cover& c);

struct FinitenessReport {
  /// Always true on finite covers; the counts are the content.
  bool holds = true;
  std::vector<std::size_t> counts;
};

/// counts[x] = number of members containing x.
FinitenessReport is_point_finite(const Cover& c);
/// counts[i] = number of other members meeting member i.
FinitenessReport is_star_finite(const Cover& c);

struct FundamentalSequence {
  std::size_t ground_size = 0;
  /// C_1, ..., C_K.
  std::vector<Cover> covers;
  /// Optional point labels.
  std::vector<std::string> labels;
};

RefinementVerdict validate_fundamental_sequence(const FundamentalSequence& seq);

struct AuMetrization {
  FiniteMetricSpace space;
  /// f(x, y) = min 2^{-n} over n with x, y in a common member of C_{2n} (C_0 = {S}).
  DistanceMatrix pre_distance;
  bool d_le_f = false;
  bool f_le_2d = false;
  /// Per n >= 1 with 2n <= K: C_{2n} consists of sets of d-diameter at most 2^{-n}.
  std::vector<RefinementVerdict> c_refines_d;
  /// Per n >= 1 with 2n <= K: sets of d-diameter at most 2^{-n-1} lie in members of C_{2n-1}.
  std::vector<RefinementVerdict> d_refines_c;
  bool certified = false;
};

AuMetrization au_metrize(const FundamentalSequence& seq);

struct PointFiniteRefinement {
  Cover refinement;
  /// source_index[k] is the index n of C's member U_n whose W_n produced member k.
  std::vector<std::size_t> source_index;
  bool refines_d = false;
  bool covers_ground = false;
  /// U_i meets V_n only when n <= i, so each U_i meets finitely many V_n.
  bool index_bound = false;
  std::optional<std::pair<std::size_t, std::size_t>> index_witness;
};

/// C must strongly star-refine B, which must strongly star-refine D.
/// Without B, B = {st(U, C) | U in C} is used.
PointFiniteRefinement point_finite_refinement(const Cover& d, const Cover& c,
                                              const std::optional<Cover>& intermediate = std::nullopt);

}  // namespace unimetric

#endif  // UNIMETRIC_COVERS_HPP_
