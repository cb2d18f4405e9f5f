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

#include "unimetric/inverse_limits.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "unimetric/quotient.hpp"

namespace unimetric {

namespace {

Subset image_of(const TotalMap& f) {
  std::set<std::size_t> s(f.begin(), f.end());
  return {s.begin(), s.end()};
}

// Every point of `a` lies within eps of some point of `b`.
bool within(const FiniteMetricSpace& m, const Subset& a, const Subset& b, const Scalar& eps) {
  for (std::size_t p : a) {
    const auto d = m.distance_to_set(p, b);
    if (!d || *d > eps) return false;
  }
  return true;
}

std::vector<Scalar> epsilons_for(const FiniteMetricSpace& level, const std::optional<std::vector<Scalar>>& given) {
  return given ? *given : level.spectrum();
}

std::optional<std::pair<std::size_t, std::size_t>> continuity_witness(const FiniteMetricSpace& source,
                                                                      const FiniteMetricSpace& target,
                                                                      const TotalMap& f, const Scalar& delta,
                                                                      const Scalar& eps) {
  for (std::size_t a = 0; a < source.size(); ++a) {
    for (std::size_t b = a + 1; b < source.size(); ++b) {
      if (source(a, b) <= delta && target(f[a], f[b]) > eps) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

void require_truncation(const InverseSequenceTruncation& t) {
  if (t.levels.empty()) throw StructuralError("inverse sequence needs at least one level");
  if (t.bonds.size() + 1 != t.levels.size()) throw StructuralError("inverse sequence needs one bond per adjacent pair");
  for (std::size_t i = 0; i < t.bonds.size(); ++i) {
    try {
      require_total(t.bonds[i], t.levels[i + 1].size(), t.levels[i].size());
    } catch (const StructuralError& e) {
      throw StructuralError("bond " + std::to_string(i + 1) + " -> " + std::to_string(i) + ": " + e.what());
    }
  }
}

TotalMap composite_bond(const InverseSequenceTruncation& t, std::size_t k, std::size_t i) {
  if (i > k || k >= t.levels.size()) throw PreconditionError("composite bond needs i <= k <= N");
  TotalMap f = identity_map(t.levels[k].size());
  for (std::size_t l = k; l > i; --l) f = compose(t.bonds[l - 1], f);
  return f;
}

std::vector<Thread> threads(const InverseSequenceTruncation& t, std::size_t cap) {
  require_truncation(t);
  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    if (t.levels[i].size() > cap) {
      throw PreconditionError("level " + std::to_string(i) + " has " + std::to_string(t.levels[i].size()) +
                              " points, above the cap of " + std::to_string(cap));
    }
  }
  const std::size_t n = t.top();
  std::vector<Thread> out(t.levels[n].size(), Thread(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    const TotalMap p = composite_bond(t, n, i);
    for (std::size_t x = 0; x < out.size(); ++x) out[x][i] = p[x];
  }
  return out;
}

FiniteMetricSpace thread_metric(const InverseSequenceTruncation& t, const std::vector<Thread>& ts) {
  return weighted_sup_metric(t.levels, ts);
}

std::vector<MittagLefflerLevel> mittag_leffler_report(const InverseSequenceTruncation& t) {
  require_truncation(t);
  const std::size_t n = t.top();
  std::vector<MittagLefflerLevel> out;
  for (std::size_t i = 0; i <= n; ++i) {
    MittagLefflerLevel row;
    row.level = i;
    for (std::size_t k = i; k <= n; ++k) row.images.push_back(image_of(composite_bond(t, k, i)));
    std::size_t j = n;
    while (j > i && row.images[j - 1 - i] == row.images[n - i]) --j;
    // Agreement only at the top says nothing about the untruncated sequence.
    if (j < n || i == n) row.stabilized_at = j;
    out.push_back(std::move(row));
  }
  return out;
}

ContainmentReport convergence_report(const InverseSequenceTruncation& t,
                                     const std::optional<std::vector<Scalar>>& epsilons) {
  require_truncation(t);
  const std::size_t n = t.top();
  ContainmentReport out;
  for (std::size_t i = 0; i <= n; ++i) {
    ContainmentLevel level{i, {}};
    const FiniteMetricSpace& xi = t.levels[i];
    std::vector<Subset> images;
    for (std::size_t k = i; k <= n; ++k) images.push_back(image_of(composite_bond(t, k, i)));
    const Subset& target = images.back();
    for (const Scalar& eps : epsilons_for(xi, epsilons)) {
      std::size_t j0 = n;
      while (j0 > i && within(xi, images[j0 - 1 - i], target, eps)) --j0;
      ContainmentRow row{eps, j0 < n || i == n, std::nullopt};
      if (row.holds) row.from = j0;
      out.passed = out.passed && row.holds;
      level.rows.push_back(row);
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

ContainmentReport cauchy_report(const InverseSequenceTruncation& t,
                                const std::optional<std::vector<Scalar>>& epsilons) {
  require_truncation(t);
  const std::size_t n = t.top();
  // Bonds are total, so the nonempty levels form a prefix 0..top.
  std::size_t count = 0;
  while (count <= n && t.levels[count].size() > 0) ++count;
  ContainmentReport out;
  for (std::size_t i = 0; i <= n; ++i) {
    ContainmentLevel level{i, {}};
    const FiniteMetricSpace& xi = t.levels[i];
    std::vector<Subset> images;
    for (std::size_t k = i; k < count; ++k) images.push_back(image_of(composite_bond(t, k, i)));
    for (const Scalar& eps : epsilons_for(xi, epsilons)) {
      ContainmentRow row{eps, false, std::nullopt};
      if (i + 1 >= count) {
        row.holds = true;
        row.from = i;
      } else {
        for (std::size_t k = i; k + 1 < count && !row.holds; ++k) {
          bool all = true;
          for (std::size_t j = k + 1; j < count && all; ++j) all = within(xi, images[k - i], images[j - i], eps);
          if (all) {
            row.holds = true;
            row.from = k;
          }
        }
      }
      out.passed = out.passed && row.holds;
      level.rows.push_back(row);
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

SeparationIndex separation_index(const InverseSequenceTruncation& t, const Scalar& eps) {
  const std::vector<Thread> ts = threads(t);
  const FiniteMetricSpace space = thread_metric(t, ts);
  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    TotalMap proj(ts.size());
    for (std::size_t x = 0; x < ts.size(); ++x) proj[x] = ts[x][i];
    if (!is_separating_at(space, t.levels[i], proj, eps, 0)) continue;
    std::optional<Scalar> closest;
    for (std::size_t a = 0; a < ts.size(); ++a) {
      for (std::size_t b = a + 1; b < ts.size(); ++b) {
        const Scalar& d = t.levels[i](proj[a], proj[b]);
        if (d > 0 && (!closest || d < *closest)) closest = d;
      }
    }
    if (!closest) return {i, Scalar(1)};
    if (is_separating_at(space, t.levels[i], proj, eps, *closest)) return {i, *closest};
    return {i, Scalar(*closest / 2)};
  }
  return {std::nullopt, Scalar(0)};
}

TelescopeResult telescope_metric(const InverseSequenceTruncation& t, std::size_t a, std::size_t b, const Grid& grid) {
  require_truncation(t);
  if (a > b || b > t.top()) throw PreconditionError("telescope needs a <= b <= N");
  require_grid(grid, 0, 1, "telescope");
  if (grid.front() != 0) throw PreconditionError("telescope grid must contain 0");
  TelescopeResult out;
  out.level_metrics.push_back(t.levels[a]);
  out.space = t.levels[a];
  out.top_slice = identity_map(t.levels[a].size());
  for (std::size_t i = a; i < b; ++i) {
    require_diameter_at_most(t.levels[i + 1], 2, "telescope level " + std::to_string(i + 1));
    const CylinderResult cyl = mapping_cylinder_metric(t.levels[i + 1], out.level_metrics.back(), t.bonds[i], grid, false);
    out.level_metrics.push_back(cyl.adjusted_x);
    Subset slice(t.levels[i + 1].size());
    for (std::size_t x = 0; x < slice.size(); ++x) slice[x] = cyl.layout.index(x, 0);
    if (i == a) {
      out.space = cyl.space;
      out.top_slice = slice;
      continue;
    }
    Subset base(t.levels[i].size());
    for (std::size_t y = 0; y < base.size(); ++y) base[y] = cyl.layout.y_index(y);
    const AmalgamResult glued =
        amalgamated_union(out.space, cyl.space, out.top_slice, base, isolating_cross_distance(out.space, cyl.space));
    out.d2_equals_dinf = out.d2_equals_dinf && glued.d2_equals_dinf && glued.x_isometric && glued.y_isometric;
    // The cylinder's (x, t) points come before its base, so they keep their order after the old space.
    for (std::size_t& s : slice) s += out.space.size();
    out.space = glued.space;
    out.top_slice = slice;
  }
  return out;
}

PerturbationResult perturbation_limit(const LadderData& ladder) {
  require_truncation(ladder.x);
  require_truncation(ladder.y);
  const std::size_t n = ladder.y.top();
  if (ladder.cross.size() != n + 1) throw StructuralError("ladder needs one cross map per Y level");
  std::vector<std::size_t> index = ladder.index;
  if (index.empty()) {
    for (std::size_t i = 0; i <= n; ++i) index.push_back(i);
  }
  if (index.size() != n + 1) throw StructuralError("ladder index list must have one entry per Y level");
  for (std::size_t i = 0; i <= n; ++i) {
    if (index[i] > ladder.x.top()) throw StructuralError("ladder index exceeds the X truncation");
    if (i > 0 && index[i] < index[i - 1]) throw StructuralError("ladder index must be nondecreasing");
    require_total(ladder.cross[i], ladder.x.levels[index[i]].size(), ladder.y.levels[i].size());
  }
  const auto& ys = ladder.y.levels;

  PerturbationResult out;
  if (ladder.betas) {
    if (ladder.betas->size() != n + 1) throw StructuralError("ladder needs one beta per Y level");
    out.betas = *ladder.betas;
    for (const Scalar& b : out.betas) {
      if (b <= 0) throw PreconditionError("beta must be positive");
    }
  } else {
    for (const auto& y : ys) out.betas.push_back(y.min_positive_distance().value_or(Scalar(1)) / 9);
  }
  if (ladder.alphas && ladder.alphas->size() != n) throw StructuralError("ladder needs one alpha per bond");

  std::vector<std::vector<TotalMap>> q(n + 1);  // q[i][j] = q^i_j
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) q[i].push_back(composite_bond(ladder.y, i, j));
  }
  auto modulus_target = [&](std::size_t i, std::size_t j) -> Scalar { return pow2(static_cast<long>(j) - static_cast<long>(i)) * out.betas[j]; };

  for (std::size_t i = 0; i < n; ++i) {
    // How far the square between levels i and i + 1 is from commuting.
    const TotalMap lower = compose(ladder.cross[i], composite_bond(ladder.x, index[i + 1], index[i]));
    const TotalMap upper = compose(ladder.y.bonds[i], ladder.cross[i + 1]);
    Scalar measured = 0;
    std::size_t worst = 0;
    for (std::size_t x = 0; x < lower.size(); ++x) {
      if (ys[i](lower[x], upper[x]) > measured) {
        measured = ys[i](lower[x], upper[x]);
        worst = x;
      }
    }
    out.measured.push_back(measured);

    Scalar alpha;
    if (ladder.alphas) {
      alpha = (*ladder.alphas)[i];
      if (alpha < 0) throw PreconditionError("alpha must be nonnegative");
    } else {
      // Largest value in {0} u spectrum(Y_i) for which every q^i_j keeps its modulus.
      alpha = 0;
      for (const Scalar& s : ys[i].spectrum()) {
        bool ok = true;
        for (std::size_t j = 0; j <= i && ok; ++j) ok = is_continuous_at(ys[i], ys[j], q[i][j], s, modulus_target(i, j));
        if (!ok) break;
        alpha = s;
      }
    }
    out.alphas.push_back(alpha);
    if (out.failure) continue;
    if (measured > alpha) {
      out.failure = HypothesisFailure{"closeness", i, std::nullopt, {worst}};
      continue;
    }
    for (std::size_t j = 0; j <= i && !out.failure; ++j) {
      if (auto w = continuity_witness(ys[i], ys[j], q[i][j], alpha, modulus_target(i, j))) {
        out.failure = HypothesisFailure{"continuity", i, j, {w->first, w->second}};
      }
    }
  }

  const std::vector<Thread> xs = threads(ladder.x);
  // f_i evaluated on the level index[i] coordinate of each X-thread.
  auto stage = [&](std::size_t i, std::size_t j) {
    TotalMap f(xs.size());
    for (std::size_t x = 0; x < xs.size(); ++x) f[x] = q[i][j][ladder.cross[i][xs[x][index[i]]]];
    return f;
  };
  out.limit.assign(xs.size(), Thread(n + 1));
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      if (map_distance(ys[j], stage(i + 1, j), stage(i, j)) > modulus_target(i, j)) out.telescoping_ok = false;
    }
    const TotalMap fj = stage(n, j);
    for (std::size_t x = 0; x < xs.size(); ++x) out.limit[x][j] = fj[x];
    const Scalar gap = xs.empty() ? Scalar(0) : map_distance(ys[j], fj, stage(j, j));
    out.closeness.push_back(gap);
    if (gap > 2 * out.betas[j]) out.closeness_ok = false;
  }

  const std::vector<Thread> yts = threads(ladder.y);
  for (const Thread& x : xs) {
    std::size_t candidates = 0;
    for (const Thread& y : yts) {
      bool close = true;
      for (std::size_t j = 0; j <= n && close; ++j) {
        close = ys[j](y[j], ladder.cross[j][x[index[j]]]) <= 2 * out.betas[j];
      }
      if (close) ++candidates;
    }
    if (candidates != 1) out.unique = false;
  }
  const std::set<Thread> distinct(out.limit.begin(), out.limit.end());
  out.injective = distinct.size() == out.limit.size();
  return out;
}

}  // namespace unimetric
