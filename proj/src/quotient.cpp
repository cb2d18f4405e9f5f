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

#include "unimetric/quotient.hpp"

#include <algorithm>

namespace unimetric {

std::vector<Subset> Surjection::classes() const {
  std::vector<Subset> out(class_count);
  for (std::size_t p = 0; p < class_of.size(); ++p) out[class_of[p]].push_back(p);
  return out;
}

void require_surjection(const Surjection& f, std::size_t source_size) {
  if (f.class_of.size() != source_size) {
    throw StructuralError("surjection has " + std::to_string(f.class_of.size()) + " entries for " +
                          std::to_string(source_size) + " points");
  }
  std::vector<bool> hit(f.class_count, false);
  for (std::size_t c : f.class_of) {
    if (c >= f.class_count) throw StructuralError("class index " + std::to_string(c) + " out of range");
    hit[c] = true;
  }
  for (std::size_t c = 0; c < f.class_count; ++c) {
    if (!hit[c]) throw StructuralError("class " + std::to_string(c) + " has no preimage");
  }
}

std::vector<std::string> class_labels(const FiniteMetricSpace& m, const Surjection& f) {
  std::vector<std::string> out;
  for (const Subset& cls : f.classes()) {
    if (cls.size() == 1) {
      out.push_back(m.label(cls.front()));
      continue;
    }
    std::string s = "[";
    for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + m.label(cls[i]);
    out.push_back(s + "]");
  }
  return out;
}

DistanceMatrix block_distance(const FiniteMetricSpace& m, const Surjection& f) {
  require_surjection(f, m.size());
  const std::size_t k = f.class_count;
  std::vector<std::vector<std::optional<Scalar>>> best(k, std::vector<std::optional<Scalar>>(k));
  for (std::size_t p = 0; p < m.size(); ++p) {
    for (std::size_t q = 0; q < m.size(); ++q) {
      auto& slot = best[f.class_of[p]][f.class_of[q]];
      if (!slot || m(p, q) < *slot) slot = m(p, q);
    }
  }
  DistanceMatrix out(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) out(a, b) = a == b ? Scalar(0) : *best[a][b];
  }
  return out;
}

namespace {

DistanceMatrix min_plus_step(const DistanceMatrix& current, const DistanceMatrix& block) {
  const std::size_t k = block.size();
  DistanceMatrix next = current;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t b = 0; b < k; ++b) {
        Scalar via = current(a, c) + block(c, b);
        if (via < next(a, b)) next(a, b) = via;
      }
    }
  }
  return next;
}

}  // namespace

DistanceMatrix chain_closure(const DistanceMatrix& block, std::size_t segments) {
  if (segments == 0) throw PreconditionError("chain length must be at least 1");
  DistanceMatrix current = block;
  for (std::size_t s = 1; s < segments; ++s) {
    DistanceMatrix next = min_plus_step(current, block);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

ChainMetric chain_metric(const FiniteMetricSpace& m, const Surjection& f, std::optional<std::size_t> n) {
  if (n && *n == 0) throw PreconditionError("chain length must be at least 1");
  DistanceMatrix block = block_distance(m, f);
  const std::size_t k = block.size();
  ChainMetric out;
  out.n = n;
  out.values = chain_closure(block, n ? *n : std::max<std::size_t>(1, k > 0 ? k - 1 : 1));
  out.d_infinity = shortest_paths(block);
  for (std::size_t i = 0; i < k && !out.triangle_witness; ++i) {
    for (std::size_t j = 0; j < k && !out.triangle_witness; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (out.values(i, l) > out.values(i, j) + out.values(j, l)) {
          out.triangle_witness = std::vector<std::size_t>{i, j, l};
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < k && !out.positivity_witness; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (out.values(i, j) == 0) {
        out.positivity_witness = std::make_pair(i, j);
        break;
      }
    }
  }
  out.is_metric = !out.triangle_witness && !out.positivity_witness;
  out.equals_dinf = out.values == out.d_infinity;
  return out;
}

FiniteMetricSpace chain_quotient(const FiniteMetricSpace& m, const Surjection& f, const ChainMetric& chain) {
  return FiniteMetricSpace(class_labels(m, f), chain.values);
}

ModulusTable quotient_order_modulus(const FiniteMetricSpace& m, const Surjection& f, std::size_t n) {
  ChainMetric chain = chain_metric(m, f, n);
  FiniteMetricSpace dinf(class_labels(m, f), chain.d_infinity);
  ModulusTable table;
  for (const Scalar& delta : dinf.spectrum()) {
    Scalar eps = 0;
    for (std::size_t a = 0; a < dinf.size(); ++a) {
      for (std::size_t b = a + 1; b < dinf.size(); ++b) {
        if (dinf(a, b) <= delta) eps = std::max(eps, chain.values(a, b));
      }
    }
    table.rows.push_back({delta, eps});
  }
  return table;
}

QuotientResult quotient_by_discrete_family(const FiniteMetricSpace& x, const std::vector<Subset>& family) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> member_of(x.size(), kUnset);
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (family[k].empty()) throw PreconditionError("family member " + std::to_string(k) + " is empty");
    for (std::size_t p : family[k]) {
      if (p >= x.size()) throw StructuralError("family member " + std::to_string(k) + " has an index out of range");
      if (member_of[p] != kUnset && member_of[p] != k) {
        throw PreconditionError("family members " + std::to_string(member_of[p]) + " and " + std::to_string(k) +
                                " overlap at " + x.label(p));
      }
      member_of[p] = k;
    }
  }
  QuotientResult out;
  out.surjection.class_of.assign(x.size(), kUnset);
  std::vector<std::size_t> class_of_member(family.size(), kUnset);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (member_of[p] == kUnset) {
      out.surjection.class_of[p] = out.surjection.class_count++;
    } else {
      auto& c = class_of_member[member_of[p]];
      if (c == kUnset) c = out.surjection.class_count++;
      out.surjection.class_of[p] = c;
    }
  }
  ChainMetric chain = chain_metric(x, out.surjection, 2);
  out.space = chain_quotient(x, out.surjection, chain);
  out.d2_equals_dinf = chain.equals_dinf;
  out.is_metric = chain.is_metric;
  return out;
}

AmalgamResult amalgamated_union(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Subset& a,
                                const Subset& b, const Scalar& cross) {
  if (a.size() != b.size()) throw StructuralError("amalgam: the glued sets differ in size");
  std::vector<bool> seen_a(x.size(), false);
  std::vector<bool> seen_b(y.size(), false);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] >= x.size() || b[k] >= y.size()) throw StructuralError("amalgam: glued index out of range");
    if (seen_a[a[k]] || seen_b[b[k]]) throw PreconditionError("amalgam: the gluing map is not a bijection");
    seen_a[a[k]] = seen_b[b[k]] = true;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (x(a[i], a[j]) != y(b[i], b[j])) {
        throw PreconditionError("amalgam: the gluing map is not an isometry at pair (" + x.label(a[i]) + ", " +
                                x.label(a[j]) + "): " + format_scalar(x(a[i], a[j])) +
                                " != " + format_scalar(y(b[i], b[j])));
      }
    }
  }
  FiniteMetricSpace joint = disjoint_union_metric(x, y, cross);

  AmalgamResult out;
  auto& s = out.surjection;
  s.class_of.resize(x.size() + y.size());
  for (std::size_t p = 0; p < x.size(); ++p) s.class_of[p] = p;
  s.class_count = x.size();
  std::vector<std::size_t> partner(y.size(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < a.size(); ++k) partner[b[k]] = a[k];
  for (std::size_t q = 0; q < y.size(); ++q) {
    s.class_of[x.size() + q] = seen_b[q] ? partner[q] : s.class_count++;
  }

  ChainMetric chain = chain_metric(joint, s, 2);
  out.space = chain_quotient(joint, s, chain);
  out.d2_equals_dinf = chain.equals_dinf;
  out.is_metric = chain.is_metric;
  out.x_isometric = true;
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (std::size_t q = 0; q < x.size(); ++q) out.x_isometric = out.x_isometric && out.space(p, q) == x(p, q);
  }
  out.y_isometric = true;
  for (std::size_t p = 0; p < y.size(); ++p) {
    for (std::size_t q = 0; q < y.size(); ++q) {
      out.y_isometric = out.y_isometric && out.space(s.class_of[x.size() + p], s.class_of[x.size() + q]) == y(p, q);
    }
  }
  return out;
}

AdjunctionResult adjunction_with_metric(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const PartialMap& f,
                                        const Scalar& cross) {
  require_partial(f, x.size(), y.size());
  if (f.domain.empty()) throw PreconditionError("adjunction: the glued subset A is empty");
  for (std::size_t i = 0; i < f.domain.size(); ++i) {
    for (std::size_t j = i + 1; j < f.domain.size(); ++j) {
      if (y(f.assignment[i], f.assignment[j]) > x(f.domain[i], f.domain[j])) {
        throw PreconditionError("adjunction: f is not 1-Lipschitz at pair (" + x.label(f.domain[i]) + ", " +
                                x.label(f.domain[j]) + ")");
      }
    }
  }
  AdjunctionResult out;
  out.disjoint = disjoint_union_metric(x, y, cross);

  auto& s = out.surjection;
  s.class_of.resize(x.size() + y.size());
  s.class_count = y.size();
  for (std::size_t q = 0; q < y.size(); ++q) s.class_of[x.size() + q] = q;
  std::vector<bool> in_a(x.size(), false);
  for (std::size_t k = 0; k < f.domain.size(); ++k) {
    in_a[f.domain[k]] = true;
    s.class_of[f.domain[k]] = f.assignment[k];
  }
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (!in_a[p]) s.class_of[p] = s.class_count++;
  }

  ChainMetric chain = chain_metric(out.disjoint, s, 3);
  out.space = chain_quotient(out.disjoint, s, chain);
  out.d_infinity = chain.d_infinity;
  out.d3_equals_dinf = chain.equals_dinf;
  out.is_metric = chain.is_metric;

  out.y_isometric = true;
  for (std::size_t p = 0; p < y.size(); ++p) {
    for (std::size_t q = 0; q < y.size(); ++q) out.y_isometric = out.y_isometric && out.space(p, q) == y(p, q);
  }

  out.separated_from_y = true;
  for (std::size_t p = 0; p < x.size() && out.separated_from_y; ++p) {
    if (in_a[p]) continue;
    Scalar to_a = *x.distance_to_set(p, f.domain);
    for (std::size_t q = 0; q < y.size(); ++q) {
      if (to_a <= 0 || out.d_infinity(s.class_of[p], q) < to_a) {
        out.separated_from_y = false;
        out.separation_witness = std::make_pair(p, q);
        break;
      }
    }
  }
  return out;
}

AdjunctionResult adjunction_space(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const PartialMap& f) {
  require_partial(f, x.size(), y.size());
  if (f.domain.empty()) throw PreconditionError("adjunction: the glued subset A is empty");
  require_diameter_at_most(x, 1, "adjunction (X)");
  require_diameter_at_most(y, 1, "adjunction (Y)");

  // D = d_X + d_Y(f, f) on A, capped at 1 so the extension stays within the unit diameter.
  const std::size_t k = f.domain.size();
  DistanceMatrix adjusted(k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(x.label(f.domain[i]));
    for (std::size_t j = 0; j < k; ++j) {
      adjusted(i, j) = std::min(Scalar(x(f.domain[i], f.domain[j]) + y(f.assignment[i], f.assignment[j])), Scalar(1));
    }
  }
  FiniteMetricSpace extended = extend_metric(x, f.domain, FiniteMetricSpace(std::move(labels), std::move(adjusted)));
  return adjunction_with_metric(extended, y, f, 1);
}

}  // namespace unimetric
