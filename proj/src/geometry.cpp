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

#include "unimetric/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace unimetric {

namespace {

std::string point_label(const std::string& base, const Scalar& t) { return "(" + base + "," + format_scalar(t) + ")"; }

Grid below_one(const Grid& grid) {
  Grid out;
  for (const Scalar& t : grid) {
    if (t < 1) out.push_back(t);
  }
  return out;
}

}  // namespace

void require_grid(const Grid& grid, const Scalar& lo, const Scalar& hi, std::string_view what) {
  const std::string name(what);
  if (grid.size() < 2) throw PreconditionError(name + ": grid needs at least two points");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i] < grid[i + 1])) throw PreconditionError(name + ": grid is not strictly increasing");
  }
  if (grid.front() != lo || grid.back() != hi) {
    throw PreconditionError(name + ": grid must run from " + format_scalar(lo) + " to " + format_scalar(hi));
  }
}

ConeLayout cone_layout(const FiniteMetricSpace& base, const Grid& grid) {
  return {base.size(), grid.size() - 1};
}

FiniteMetricSpace cone_metric(const FiniteMetricSpace& base, const Grid& grid) {
  require_grid(grid, 0, 1, "cone");
  const ConeLayout layout = cone_layout(base, grid);
  const Grid levels = below_one(grid);
  const std::size_t n = layout.vertex() + 1;
  std::vector<std::string> labels(n);
  std::vector<std::size_t> point(n);
  std::vector<Scalar> height(n, Scalar(1));
  for (std::size_t x = 0; x < base.size(); ++x) {
    for (std::size_t l = 0; l < levels.size(); ++l) {
      const std::size_t i = layout.index(x, l);
      labels[i] = point_label(base.label(x), levels[l]);
      point[i] = x;
      height[i] = levels[l];
    }
  }
  labels[layout.vertex()] = "v";
  DistanceMatrix dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar via_vertex = (1 - height[i]) + (1 - height[j]);
      Scalar value = via_vertex;
      if (i != layout.vertex() && j != layout.vertex()) {
        value = std::min(Scalar(base(point[i], point[j]) + abs_diff(height[i], height[j])), via_vertex);
      }
      dist(i, j) = dist(j, i) = value;
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

std::vector<JoinPoint> join_points(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Grid& grid) {
  require_grid(grid, -1, 1, "join");
  std::vector<JoinPoint> out;
  for (std::size_t a = 0; a < x.size(); ++a) out.push_back({a, std::nullopt, Scalar(-1)});
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      for (std::size_t l = 1; l + 1 < grid.size(); ++l) out.push_back({a, b, grid[l]});
    }
  }
  for (std::size_t b = 0; b < y.size(); ++b) out.push_back({std::nullopt, b, Scalar(1)});
  return out;
}

Scalar join_distance(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const JoinPoint& p, const JoinPoint& q) {
  // A forgotten coordinate may be chosen freely; the formula is monotone in
  // d(x,x') and d(y,y'), so the best choice copies the other point's coordinate.
  Scalar dx = (p.x && q.x) ? x(*p.x, *q.x) : Scalar(0);
  Scalar dy = (p.y && q.y) ? y(*p.y, *q.y) : Scalar(0);
  const Scalar gap = abs_diff(p.t, q.t);
  Scalar best = dx + dy + gap;
  best = std::min(best, Scalar(dx + (p.t + 1) + (q.t + 1)));
  best = std::min(best, Scalar(dy + (1 - p.t) + (1 - q.t)));
  best = std::min(best, Scalar((2 - gap) + 2));
  return best;
}

FiniteMetricSpace join_metric(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Grid& grid) {
  auto points = join_points(x, y, grid);
  std::vector<std::string> labels;
  for (const JoinPoint& p : points) {
    std::string s = "(";
    s += p.x ? x.label(*p.x) : "*";
    s += ",";
    s += p.y ? y.label(*p.y) : "*";
    labels.push_back(s + "," + format_scalar(p.t) + ")");
  }
  DistanceMatrix dist(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) dist(i, j) = dist(j, i) = join_distance(x, y, points[i], points[j]);
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

JoinAmalgamReport join_amalgam_equality(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Grid& grid) {
  require_grid(grid, -1, 1, "join");
  if (std::find(grid.begin(), grid.end(), Scalar(0)) == grid.end()) {
    throw PreconditionError("join amalgam: grid must contain 0");
  }
  require_diameter_at_most(x, 2, "join amalgam (X)");
  require_diameter_at_most(y, 2, "join amalgam (Y)");
  if (x.size() == 0 || y.size() == 0) throw PreconditionError("join amalgam: empty factor");

  Grid upper, lower;
  for (const Scalar& t : grid) {
    if (t >= 0) upper.push_back(t);
  }
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    if (*it <= 0) lower.push_back(-*it);
  }
  const FiniteMetricSpace cone_x = cone_metric(x, upper);
  const FiniteMetricSpace cone_y = cone_metric(y, lower);
  const ConeLayout lx = cone_layout(x, upper);
  const ConeLayout ly = cone_layout(y, lower);
  // CX x Y indexed c * |Y| + b; X x CY indexed a * |CY| + c.
  const FiniteMetricSpace left = product_metric(cone_x, y, ProductNorm::kL1);
  const FiniteMetricSpace right = product_metric(x, cone_y, ProductNorm::kL1);
  Subset glue_left, glue_right;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      glue_left.push_back(lx.index(a, 0) * y.size() + b);
      glue_right.push_back(a * cone_y.size() + ly.index(b, 0));
    }
  }
  AmalgamResult glued = amalgamated_union(left, right, glue_left, glue_right, isolating_cross_distance(left, right));

  const std::size_t interior = grid.size() - 2;
  auto interior_index = [&](std::size_t a, std::size_t b, const Scalar& t) {
    std::size_t l = std::find(grid.begin(), grid.end(), t) - grid.begin() - 1;
    return x.size() + (a * y.size() + b) * interior + l;
  };
  const std::size_t y_base = x.size() + x.size() * y.size() * interior;

  JoinAmalgamReport out;
  out.join_class.assign(glued.space.size(), 0);
  for (std::size_t c = 0; c < cone_x.size(); ++c) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      const std::size_t cls = glued.surjection.class_of[c * y.size() + b];
      if (c == lx.vertex()) {
        out.join_class[cls] = y_base + b;
      } else {
        out.join_class[cls] = interior_index(c / lx.levels, b, upper[c % lx.levels]);
      }
    }
  }
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t c = 0; c < cone_y.size(); ++c) {
      const std::size_t cls = glued.surjection.class_of[left.size() + a * cone_y.size() + c];
      if (c == ly.vertex()) {
        out.join_class[cls] = a;
      } else {
        out.join_class[cls] = interior_index(a, c / ly.levels, Scalar(-lower[c % ly.levels]));
      }
    }
  }
  const FiniteMetricSpace join = join_metric(x, y, grid);
  out.max_discrepancy = 0;
  for (std::size_t i = 0; i < glued.space.size(); ++i) {
    for (std::size_t j = 0; j < glued.space.size(); ++j) {
      out.max_discrepancy =
          std::max(out.max_discrepancy, abs_diff(glued.space(i, j), join(out.join_class[i], out.join_class[j])));
    }
  }
  out.equal = out.max_discrepancy == 0 && glued.space.size() == join.size();
  out.amalgam = std::move(glued.space);
  return out;
}

double euclidean_cone_distance(double d, double t, double s) {
  double sq = t * t + s * s - 2 * t * s * std::cos(d);
  return std::sqrt(std::max(sq, 0.0));
}

std::vector<std::vector<double>> euclidean_cone_metric(const FiniteMetricSpace& base, const Grid& grid) {
  require_grid(grid, 0, 1, "Euclidean cone");
  if (to_double(base.diameter()) > std::numbers::pi + 1e-12) {
    throw PreconditionError("Euclidean cone: base diameter exceeds pi");
  }
  struct Level {
    std::size_t x;
    double t;
  };
  std::vector<Level> points{{0, 0.0}};
  for (std::size_t x = 0; x < base.size(); ++x) {
    for (const Scalar& t : grid) {
      if (t > 0) points.push_back({x, to_double(t)});
    }
  }
  std::vector<std::vector<double>> out(points.size(), std::vector<double>(points.size(), 0.0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const double d = (i == 0 || j == 0) ? 0.0 : to_double(base(points[i].x, points[j].x));
      out[i][j] = euclidean_cone_distance(d, points[i].t, points[j].t);
    }
  }
  return out;
}

Scalar norm_of(std::span<const Scalar> v, Norm norm) {
  Scalar out = 0;
  for (const Scalar& c : v) {
    Scalar a = abs(c);
    if (norm == Norm::kSup) {
      out = std::max(out, a);
    } else {
      out += a;
    }
  }
  return out;
}

Scalar norm_distance(std::span<const Scalar> a, std::span<const Scalar> b, Norm norm) {
  if (a.size() != b.size()) throw StructuralError("points of different dimensions");
  std::vector<Scalar> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return norm_of(diff, norm);
}

std::vector<Scalar> rectilinear_cone_point(std::span<const Scalar> x, const Scalar& t) {
  std::vector<Scalar> out;
  for (const Scalar& c : x) out.push_back((1 - t) * c);
  out.push_back(t);
  return out;
}

NormedPointSet rectilinear_cone(const NormedPointSet& s, const Grid& grid) {
  require_grid(grid, 0, 1, "rectilinear cone");
  NormedPointSet out;
  out.dim = s.dim + 1;
  out.norm = Norm::kSup;
  for (const auto& x : s.points) {
    if (x.size() != s.dim) throw StructuralError("rectilinear cone: point of the wrong dimension");
    for (const Scalar& t : grid) {
      if (t < 1) out.points.push_back(rectilinear_cone_point(x, t));
    }
  }
  std::vector<Scalar> apex(out.dim, Scalar(0));
  apex.back() = 1;
  out.points.push_back(std::move(apex));
  return out;
}

NormedPointSet independent_rectilinear_join(const NormedPointSet& s, const NormedPointSet& t, const Grid& grid) {
  require_grid(grid, 0, 1, "rectilinear join");
  NormedPointSet out;
  out.dim = s.dim + t.dim + 1;
  out.norm = Norm::kSup;
  for (const auto& x : s.points) {
    for (const auto& y : t.points) {
      for (const Scalar& u : grid) {
        std::vector<Scalar> p;
        for (const Scalar& c : x) p.push_back((1 - u) * c);
        for (const Scalar& c : y) p.push_back(u * c);
        p.push_back(2 * u - 1);
        if (std::find(out.points.begin(), out.points.end(), p) == out.points.end()) out.points.push_back(std::move(p));
      }
    }
  }
  return out;
}

ConeComparison cone_comparison_bounds(const NormedPointSet& x, const std::vector<ConeSample>& samples,
                                      double tolerance) {
  for (const auto& p : x.points) {
    if (norm_of(p, Norm::kSup) > 1) throw PreconditionError("cone comparison: point outside the unit ball");
  }
  ConeComparison out;
  for (const ConeSample& sample : samples) {
    if (sample.t < 0 || sample.t > 1 || sample.s < 0 || sample.s > 1) {
      throw PreconditionError("cone comparison: level outside [0,1]");
    }
    const auto& a = x.points.at(sample.x);
    const auto& b = x.points.at(sample.y);
    // Exact sup-norm distance of (t a, 1 - t) and (s b, 1 - s) for rational levels.
    const Scalar t(sample.t), s(sample.s);
    Scalar sup = abs_diff(t, s);
    for (std::size_t i = 0; i < a.size(); ++i) sup = std::max(sup, abs_diff(t * a[i], s * b[i]));
    const double big_s = to_double(sup);
    const double big_e = euclidean_cone_distance(to_double(norm_distance(a, b, Norm::kSup)), sample.t, sample.s);
    ++out.samples;
    if (big_s > 0) out.max_e_over_s = std::max(out.max_e_over_s, big_e / big_s);
    if (big_e > 0) out.max_s_over_e = std::max(out.max_s_over_e, big_s / big_e);
    if (big_e > 3 * big_s + tolerance || big_s > 5 * big_e + tolerance) {
      ++out.violations;
      if (!out.first_violation) out.first_violation = sample;
    }
  }
  return out;
}

namespace {

FiniteMetricSpace adjusted_metric(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const TotalMap& f) {
  DistanceMatrix dist(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) dist(a, b) = x(a, b) + y(f[a], f[b]);
  }
  return FiniteMetricSpace(x.labels(), std::move(dist));
}

FiniteMetricSpace grid_line(const Grid& grid) {
  std::vector<std::string> labels;
  DistanceMatrix dist(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    labels.push_back(format_scalar(grid[i]));
    for (std::size_t j = 0; j < grid.size(); ++j) dist(i, j) = abs_diff(grid[i], grid[j]);
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

}  // namespace

CylinderResult mapping_cylinder_metric(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const TotalMap& f,
                                       const Grid& grid, bool certify) {
  require_grid(grid, 0, 1, "mapping cylinder");
  require_total(f, x.size(), y.size());
  CylinderResult out;
  out.adjusted_x = adjusted_metric(x, y, f);
  const FiniteMetricSpace& d = out.adjusted_x;
  const Grid levels = below_one(grid);
  out.layout = {x.size(), levels.size()};
  const std::size_t n = x.size() * levels.size() + y.size();

  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t l = 0; l < levels.size(); ++l) labels[out.layout.index(a, l)] = point_label(x.label(a), levels[l]);
  }
  for (std::size_t b = 0; b < y.size(); ++b) labels[out.layout.y_index(b)] = y.label(b);

  DistanceMatrix dist(n);
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t l = 0; l < levels.size(); ++l) {
      const std::size_t i = out.layout.index(a, l);
      const Scalar& t = levels[l];
      for (std::size_t a2 = 0; a2 < x.size(); ++a2) {
        for (std::size_t l2 = 0; l2 < levels.size(); ++l2) {
          const Scalar& t2 = levels[l2];
          dist(i, out.layout.index(a2, l2)) =
              std::min(Scalar(d(a, a2) + abs_diff(t, t2)), Scalar((1 - t) + (1 - t2) + y(f[a], f[a2])));
        }
      }
      for (std::size_t b = 0; b < y.size(); ++b) {
        dist(i, out.layout.y_index(b)) = dist(out.layout.y_index(b), i) = (1 - t) + y(f[a], b);
      }
    }
  }
  for (std::size_t b = 0; b < y.size(); ++b) {
    for (std::size_t b2 = 0; b2 < y.size(); ++b2) dist(out.layout.y_index(b), out.layout.y_index(b2)) = y(b, b2);
  }
  out.space = FiniteMetricSpace(std::move(labels), std::move(dist));

  if (certify) {
    // X x I with the l1 metric, glued along X x {1} through f, with Y kept far away.
    const FiniteMetricSpace xi = product_metric(d, grid_line(grid), ProductNorm::kL1);
    PartialMap top;
    for (std::size_t a = 0; a < x.size(); ++a) {
      top.domain.push_back(a * grid.size() + grid.size() - 1);
      top.assignment.push_back(f[a]);
    }
    AdjunctionResult adj = adjunction_with_metric(xi, y, top, isolating_cross_distance(xi, y));
    // Adjunction classes: Y first, then (x, t) for t < 1 in x-major order.
    out.matches_adjunction = adj.d3_equals_dinf && adj.space.size() == n;
    for (std::size_t i = 0; i < n && out.matches_adjunction; ++i) {
      const std::size_t ai = i < x.size() * levels.size() ? y.size() + i : i - x.size() * levels.size();
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t aj = j < x.size() * levels.size() ? y.size() + j : j - x.size() * levels.size();
        if (adj.space(ai, aj) != out.space(i, j)) {
          out.matches_adjunction = false;
          break;
        }
      }
    }
  }
  return out;
}

bool subcylinder_property(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const TotalMap& f, const Grid& grid,
                          const Subset& a) {
  const CylinderResult whole = mapping_cylinder_metric(x, y, f, grid, false);
  TotalMap restricted;
  for (std::size_t p : a) restricted.push_back(f.at(p));
  const CylinderResult part = mapping_cylinder_metric(x.restrict_to(a), y, restricted, grid, false);
  const std::size_t levels = whole.layout.levels;
  auto to_whole = [&](std::size_t i) {
    if (i < a.size() * levels) return whole.layout.index(a[i / levels], i % levels);
    return whole.layout.y_index(i - a.size() * levels);
  };
  for (std::size_t i = 0; i < part.space.size(); ++i) {
    for (std::size_t j = 0; j < part.space.size(); ++j) {
      if (part.space(i, j) != whole.space(to_whole(i), to_whole(j))) return false;
    }
  }
  return true;
}

UniformModulus uniform_modulus(const FiniteMetricSpace& source, const FiniteMetricSpace& target,
                               const std::vector<TotalMap>& family, const Scalar& eps) {
  if (eps <= 0) throw PreconditionError("uniform modulus: epsilon must be positive");
  for (const TotalMap& p : family) require_total(p, source.size(), target.size());
  const std::size_t k = family.size();
  const Scalar third = eps / 3;

  DistanceMatrix between(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) between(i, j) = map_distance(target, family[i], family[j]);
  }

  // U_n for n = 0, 1, ... until Z_n is the whole family; beyond that U_n = Z.
  std::vector<std::vector<bool>> u;
  for (long n = 0;; ++n) {
    const Scalar scale = pow2(-n);
    std::vector<bool> z(k);
    bool all = true;
    for (std::size_t i = 0; i < k; ++i) {
      z[i] = is_continuous_at(source, target, family[i], scale, third);
      all = all && z[i];
    }
    const Scalar radius = (1 - pow2(-n - 1)) * third;
    std::vector<bool> nbhd(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k && !nbhd[i]; ++j) nbhd[i] = z[j] && between(i, j) <= radius;
    }
    u.push_back(std::move(nbhd));
    if (all) break;
  }

  UniformModulus out;
  out.delta.resize(k);
  out.band.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (u[0][i]) {
      out.band[i] = -1;
      out.delta[i] = Scalar(1, 2);
      continue;
    }
    std::size_t m = 1;
    while (!u[m][i]) ++m;
    const long n = static_cast<long>(m) - 1;
    std::optional<Scalar> to_un;
    for (std::size_t j = 0; j < k; ++j) {
      if (u[n][j] && (!to_un || between(i, j) < *to_un)) to_un = between(i, j);
    }
    Scalar r = pow2(-n - 2);
    if (to_un) r = std::min(r, Scalar(3 * *to_un / eps));
    out.band[i] = n;
    out.delta[i] = pow2(-n - 1) - r;
  }

  out.all_continuous = true;
  for (std::size_t i = 0; i < k; ++i) {
    out.all_continuous = out.all_continuous && is_continuous_at(source, target, family[i], out.delta[i], eps);
  }
  out.lipschitz = true;
  const Scalar constant = 6 / eps;
  for (std::size_t i = 0; i < k && out.lipschitz; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (abs_diff(out.delta[i], out.delta[j]) > constant * between(i, j)) {
        out.lipschitz = false;
        out.lipschitz_witness = std::make_pair(i, j);
        break;
      }
    }
  }
  return out;
}

}  // namespace unimetric
