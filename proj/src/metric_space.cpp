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

#include "unimetric/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unimetric/quotient.hpp"

namespace unimetric {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, DistanceMatrix dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  if (dist_.size() != labels_.size()) {
    throw StructuralError("distance matrix is " + std::to_string(dist_.size()) + "x" + std::to_string(dist_.size()) +
                          " but there are " + std::to_string(labels_.size()) + " labels");
  }
}

Scalar FiniteMetricSpace::diameter() const {
  Scalar best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) best = std::max(best, dist_(i, j));
  }
  return best;
}

std::vector<Scalar> FiniteMetricSpace::spectrum() const {
  std::vector<Scalar> values;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (dist_(i, j) > 0) values.push_back(dist_(i, j));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::optional<Scalar> FiniteMetricSpace::min_positive_distance() const {
  auto s = spectrum();
  if (s.empty()) return std::nullopt;
  return s.front();
}

FiniteMetricSpace FiniteMetricSpace::restrict_to(std::span<const std::size_t> subset) const {
  std::vector<std::string> labels;
  DistanceMatrix dist(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) {
    if (subset[a] >= size()) throw StructuralError("subset index out of range");
    labels.push_back(labels_[subset[a]]);
    for (std::size_t b = 0; b < subset.size(); ++b) dist(a, b) = dist_(subset[a], subset[b]);
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

std::optional<Scalar> FiniteMetricSpace::distance_to_set(std::size_t x, std::span<const std::size_t> subset) const {
  std::optional<Scalar> best;
  for (std::size_t s : subset) {
    if (!best || dist_(x, s) < *best) best = dist_(x, s);
  }
  return best;
}

FiniteMetricSpace make_space(std::vector<std::string> labels, const std::vector<std::vector<Scalar>>& rows) {
  DistanceMatrix dist(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw StructuralError("distance matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) dist(i, j) = rows[i][j];
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

FiniteMetricSpace make_space(const std::vector<std::vector<Scalar>>& rows) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rows.size(); ++i) labels.push_back(std::to_string(i));
  return make_space(std::move(labels), rows);
}

AxiomReport check_metric_axioms(const FiniteMetricSpace& space, bool allow_pseudo) {
  const std::size_t n = space.size();
  AxiomReport report;
  auto record = [&](std::string axiom, std::vector<std::size_t> witness, const Scalar& lhs, const Scalar& rhs) {
    for (std::size_t k = 0; k < report.violations.size(); ++k) {
      if (report.violations[k].axiom == axiom) {
        ++report.violation_counts[k];
        return;
      }
    }
    report.violations.push_back({std::move(axiom), std::move(witness), lhs, rhs});
    report.violation_counts.push_back(1);
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (space(i, i) != 0) record("zero_diagonal", {i}, space(i, i), 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (space(i, j) != space(j, i)) record("symmetry", {i, j}, space(i, j), space(j, i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (space(i, j) < 0) record("nonnegativity", {i, j}, space(i, j), 0);
    }
  }
  if (!allow_pseudo) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (space(i, j) == 0) record("positivity", {i, j}, space(i, j), 0);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Scalar rhs = space(i, j) + space(j, k);
        if (space(i, k) > rhs) record("triangle", {i, j, k}, space(i, k), rhs);
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

FiniteMetricSpace product_metric(const FiniteMetricSpace& m, const FiniteMetricSpace& n, ProductNorm norm) {
  const std::size_t size = m.size() * n.size();
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < n.size(); ++b) labels.push_back("(" + m.label(a) + "," + n.label(b) + ")");
  }
  DistanceMatrix dist(size);
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t q = 0; q < size; ++q) {
      const Scalar& dm = m(p / n.size(), q / n.size());
      const Scalar& dn = n(p % n.size(), q % n.size());
      switch (norm) {
        case ProductNorm::kL1:
          dist(p, q) = dm + dn;
          break;
        case ProductNorm::kL2Squared:
          dist(p, q) = dm * dm + dn * dn;
          break;
        case ProductNorm::kLinf:
          dist(p, q) = std::max(dm, dn);
          break;
      }
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

void require_diameter_at_most(const FiniteMetricSpace& m, const Scalar& bound, std::string_view what) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m(i, j) > bound) {
        std::ostringstream msg;
        msg << what << ": diameter exceeds " << format_scalar(bound) << " at pair (" << m.label(i) << ", "
            << m.label(j) << ") with distance " << format_scalar(m(i, j));
        throw PreconditionError(msg.str());
      }
    }
  }
}

FiniteMetricSpace disjoint_union_metric(const FiniteMetricSpace& m, const FiniteMetricSpace& n, const Scalar& cross) {
  if (cross <= 0) throw PreconditionError("disjoint union: cross distance must be positive");
  const Scalar bound = 2 * cross;
  if (cross == 1) {
    require_diameter_at_most(m, 1, "disjoint union (first space)");
    require_diameter_at_most(n, 1, "disjoint union (second space)");
  } else {
    require_diameter_at_most(m, bound, "disjoint union (first space)");
    require_diameter_at_most(n, bound, "disjoint union (second space)");
  }
  const std::size_t total = m.size() + n.size();
  std::vector<std::string> labels = m.labels();
  labels.insert(labels.end(), n.labels().begin(), n.labels().end());
  DistanceMatrix dist(total, cross);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) dist(i, j) = m(i, j);
  }
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = 0; j < n.size(); ++j) dist(m.size() + i, m.size() + j) = n(i, j);
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

Scalar isolating_cross_distance(const FiniteMetricSpace& m, const FiniteMetricSpace& n) {
  return m.diameter() + n.diameter() + 1;
}

Scalar weighted_sup_distance(std::span<const FiniteMetricSpace> levels, std::span<const std::size_t> a,
                             std::span<const std::size_t> b) {
  Scalar best = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    best = std::max(best, Scalar(pow2(-static_cast<long>(i + 1)) * levels[i](a[i], b[i])));
  }
  return best;
}

FiniteMetricSpace weighted_sup_metric(std::span<const FiniteMetricSpace> levels,
                                      const std::vector<std::vector<std::size_t>>& tuples,
                                      std::vector<std::string> labels) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    require_diameter_at_most(levels[i], 1, "weighted sup metric level " + std::to_string(i + 1));
  }
  for (const auto& t : tuples) {
    if (t.size() != levels.size()) throw StructuralError("tuple length does not match level count");
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] >= levels[i].size()) throw StructuralError("tuple coordinate out of range");
    }
  }
  if (labels.empty()) {
    for (const auto& t : tuples) {
      std::string s = "(";
      for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + levels[i].label(t[i]);
      labels.push_back(s + ")");
    }
  }
  DistanceMatrix dist(tuples.size());
  for (std::size_t p = 0; p < tuples.size(); ++p) {
    for (std::size_t q = 0; q < tuples.size(); ++q) dist(p, q) = weighted_sup_distance(levels, tuples[p], tuples[q]);
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

FiniteMetricSpace weighted_sup_metric(std::span<const FiniteMetricSpace> levels) {
  std::vector<std::vector<std::size_t>> tuples{{}};
  for (const auto& level : levels) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples) {
      for (std::size_t k = 0; k < level.size(); ++k) {
        auto u = t;
        u.push_back(k);
        next.push_back(std::move(u));
      }
    }
    tuples = std::move(next);
  }
  return weighted_sup_metric(levels, tuples);
}

Scalar hausdorff_distance(const FiniteMetricSpace& m, std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.empty() || b.empty()) throw PreconditionError("Hausdorff distance needs nonempty sets");
  Scalar best = 0;
  for (std::size_t x : a) best = std::max(best, *m.distance_to_set(x, b));
  for (std::size_t y : b) best = std::max(best, *m.distance_to_set(y, a));
  return best;
}

Subset hyperspace_subset(std::size_t k, std::size_t ground_size) {
  const std::size_t mask = k + 1;
  Subset s;
  for (std::size_t i = 0; i < ground_size; ++i) {
    if (mask & (std::size_t{1} << i)) s.push_back(i);
  }
  return s;
}

FiniteMetricSpace hausdorff_hyperspace(const FiniteMetricSpace& m, std::size_t cap) {
  const std::size_t n = m.size();
  if (n > cap) {
    throw PreconditionError("hyperspace: " + std::to_string(n) + " points exceeds the cap of " + std::to_string(cap));
  }
  if (n == 0) return FiniteMetricSpace();
  const std::size_t count = (std::size_t{1} << n) - 1;
  // to_set[k][x] = d(x, subset k)
  std::vector<std::vector<Scalar>> to_set(count, std::vector<Scalar>(n));
  std::vector<Subset> subsets(count);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < count; ++k) {
    subsets[k] = hyperspace_subset(k, n);
    for (std::size_t x = 0; x < n; ++x) to_set[k][x] = *m.distance_to_set(x, subsets[k]);
    std::string s = "{";
    for (std::size_t i = 0; i < subsets[k].size(); ++i) s += (i ? "," : "") + m.label(subsets[k][i]);
    labels.push_back(s + "}");
  }
  DistanceMatrix dist(count);
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t q = p + 1; q < count; ++q) {
      Scalar best = 0;
      for (std::size_t x : subsets[p]) best = std::max(best, to_set[q][x]);
      for (std::size_t y : subsets[q]) best = std::max(best, to_set[p][y]);
      if (best > 1) best = 1;
      dist(p, q) = best;
      dist(q, p) = best;
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

std::vector<SequencePoint> kuratowski_embed(const FiniteMetricSpace& m) {
  require_diameter_at_most(m, 1, "Kuratowski embedding");
  std::vector<SequencePoint> out;
  out.reserve(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::map<SequencePoint::Index, Scalar> coords;
    for (std::size_t p = 0; p < m.size(); ++p) coords.emplace(p, m(x, p));
    out.emplace_back(std::move(coords), 0);
  }
  return out;
}

std::vector<Scalar> mcshane_extend(const FiniteMetricSpace& x, std::span<const std::size_t> domain,
                                   std::span<const Scalar> values, const Scalar& lipschitz) {
  if (domain.size() != values.size()) throw StructuralError("McShane: one value per domain point is required");
  if (domain.empty()) throw PreconditionError("McShane: empty domain");
  if (lipschitz < 0) throw PreconditionError("McShane: negative Lipschitz constant");
  for (std::size_t a = 0; a < domain.size(); ++a) {
    if (domain[a] >= x.size()) throw StructuralError("McShane: domain index out of range");
    for (std::size_t b = a + 1; b < domain.size(); ++b) {
      if (abs_diff(values[a], values[b]) > lipschitz * x(domain[a], domain[b])) {
        throw PreconditionError("McShane: g is not " + format_scalar(lipschitz) + "-Lipschitz at pair (" +
                                x.label(domain[a]) + ", " + x.label(domain[b]) + ")");
      }
    }
  }
  std::vector<Scalar> out(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    Scalar best = values[0] + lipschitz * x(p, domain[0]);
    for (std::size_t a = 1; a < domain.size(); ++a) best = std::min(best, Scalar(values[a] + lipschitz * x(p, domain[a])));
    out[p] = best;
  }
  return out;
}

FiniteMetricSpace extend_metric(const FiniteMetricSpace& x, std::span<const std::size_t> subset,
                                const FiniteMetricSpace& on_subset) {
  if (on_subset.size() != subset.size()) throw StructuralError("extend_metric: metric size differs from subset size");
  if (subset.empty()) throw PreconditionError("extend_metric: empty subset");
  if (auto report = check_metric_axioms(on_subset); !report.passed) {
    throw PreconditionError("extend_metric: the metric on the subset fails the " + report.violations.front().axiom +
                            " axiom");
  }
  require_diameter_at_most(on_subset, 1, "extend_metric");
  std::vector<bool> in_subset(x.size(), false);
  for (std::size_t s : subset) {
    if (s >= x.size()) throw StructuralError("extend_metric: subset index out of range");
    if (in_subset[s]) throw StructuralError("extend_metric: repeated subset index");
    in_subset[s] = true;
  }
  if (subset.size() == x.size()) {
    DistanceMatrix dist(x.size());
    for (std::size_t a = 0; a < subset.size(); ++a) {
      for (std::size_t b = 0; b < subset.size(); ++b) dist(subset[a], subset[b]) = on_subset(a, b);
    }
    return FiniteMetricSpace(x.labels(), std::move(dist));
  }

  // Lipschitz constant of the identity (subset, d_x) -> (subset, on_subset).
  Scalar lipschitz = 0;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      const Scalar& base = x(subset[a], subset[b]);
      if (base <= 0) throw PreconditionError("extend_metric: the ambient distance vanishes on the subset");
      lipschitz = std::max(lipschitz, Scalar(on_subset(a, b) / base));
    }
  }
  // Coordinate c of the embedding is d_on_subset(., subset[c]).
  std::vector<std::vector<Scalar>> coords;
  for (std::size_t c = 0; c < subset.size(); ++c) {
    std::vector<Scalar> g(subset.size());
    for (std::size_t a = 0; a < subset.size(); ++a) g[a] = on_subset(a, c);
    auto ext = mcshane_extend(x, subset, g, lipschitz);
    for (auto& v : ext) v = std::min(v, Scalar(1));
    coords.push_back(std::move(ext));
  }

  auto quotient = quotient_by_discrete_family(x, {Subset(subset.begin(), subset.end())});
  const auto& cls = quotient.surjection.class_of;

  DistanceMatrix dist(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (std::size_t q = p + 1; q < x.size(); ++q) {
      Scalar best = std::min(quotient.space(cls[p], cls[q]), Scalar(1));
      for (const auto& coord : coords) best = std::max(best, abs_diff(coord[p], coord[q]));
      dist(p, q) = best;
      dist(q, p) = best;
    }
  }
  return FiniteMetricSpace(x.labels(), std::move(dist));
}

FiniteMetricSpace rescale(const FiniteMetricSpace& m, const Scalar& factor) {
  if (factor <= 0) throw PreconditionError("rescale factor must be positive");
  DistanceMatrix dist(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) dist(i, j) = m(i, j) * factor;
  }
  return FiniteMetricSpace(m.labels(), std::move(dist));
}

FiniteMetricSpace rescale_to_diameter(const FiniteMetricSpace& m, const Scalar& bound) {
  Scalar diam = m.diameter();
  if (diam <= bound) return m;
  return rescale(m, bound / diam);
}

FiniteMetricSpace truncate(const FiniteMetricSpace& m, const Scalar& cap) {
  DistanceMatrix dist(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) dist(i, j) = std::min(m(i, j), cap);
  }
  return FiniteMetricSpace(m.labels(), std::move(dist));
}

DistanceMatrix shortest_paths(DistanceMatrix weights) {
  const std::size_t n = weights.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar via = weights(i, k) + weights(k, j);
        if (via < weights(i, j)) weights(i, j) = via;
      }
    }
  }
  return weights;
}

std::vector<std::vector<double>> float_view(const FiniteMetricSpace& m, bool square_root) {
  std::vector<std::vector<double>> out(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      out[i][j] = square_root ? std::sqrt(to_double(m(i, j))) : to_double(m(i, j));
    }
  }
  return out;
}

}  // namespace unimetric
