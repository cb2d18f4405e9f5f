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

#include "unimetric/cubohedra.hpp"

#include <algorithm>
#include <set>

namespace unimetric {

namespace {

mpz_class floor_of(const Scalar& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

bool is_integer(const Scalar& x) { return x.get_den() == 1; }

void put(std::map<SequencePoint::Index, Scalar>& base, SequencePoint::Index i, const Scalar& v) {
  if (v == 0) {
    base.erase(i);
  } else {
    base[i] = v;
  }
}

Scalar base_at(const Cube& c, SequencePoint::Index i) {
  auto it = c.base.find(i);
  return it == c.base.end() ? Scalar(0) : it->second;
}

bool in_extent(const Cube& c, SequencePoint::Index i) {
  return std::binary_search(c.extent.begin(), c.extent.end(), i);
}

/// Distance from v to the cube's i-th factor.
Scalar coordinate_gap(const Cube& c, SequencePoint::Index i, const Scalar& v, const Scalar& edge) {
  const Scalar lo = base_at(c, i);
  if (!in_extent(c, i)) return abs_diff(v, lo);
  if (v < lo) return lo - v;
  if (v > lo + edge) return v - (lo + edge);
  return 0;
}

std::set<SequencePoint::Index> touched(const SequencePoint& x, const Cube& c) {
  std::set<SequencePoint::Index> out(c.extent.begin(), c.extent.end());
  for (const auto& [i, v] : x.support()) out.insert(i);
  for (const auto& [i, v] : c.base) out.insert(i);
  return out;
}

}  // namespace

Scalar contraction_profile(const Scalar& s, const Scalar& t) {
  Scalar v = 1 - (1 - s) * (1 + t);
  return v > 0 ? v : Scalar(0);
}

Scalar lattice_retraction(const Scalar& x, const Scalar& t) {
  const mpz_class k = floor_of(x);
  const Scalar frac = x - Scalar(k);
  const Scalar nearest = frac <= Scalar(1, 2) ? Scalar(k) : Scalar(k + 1);
  const Scalar u = x - nearest;
  const Scalar g = Scalar(1, 2) * contraction_profile(2 * abs(u), t);
  return nearest + (u < 0 ? Scalar(-g) : g);
}

SequencePoint lattice_homotopy(const SequencePoint& x, const Scalar& t, long n) {
  if (t < 0 || t > 1) throw PreconditionError("homotopy parameter must lie in [0,1]");
  const Scalar scale = pow2(n);
  return x.map_values([&](const Scalar& v) { return Scalar(lattice_retraction(v * scale, t) / scale); });
}

SequencePoint tail_contraction(const SequencePoint& x, const Scalar& t) {
  if (t < 0 || t > 1) throw PreconditionError("homotopy parameter must lie in [0,1]");
  auto check = [](const Scalar& v) {
    if (v < 0 || v > 1) throw PreconditionError("tail contraction: coordinate " + format_scalar(v) + " outside [0,1]");
  };
  check(x.tail());
  for (const auto& [i, v] : x.support()) check(v);
  return x.map_values([&](const Scalar& v) { return contraction_profile(v, t); });
}

void require_lattice_cube(const Cube& c, long level) {
  const Scalar scale = pow2(level);
  for (const auto& [i, v] : c.base) {
    if (!is_integer(v * scale)) throw StructuralError("cube base is not a lattice point at coordinate " + std::to_string(i));
  }
  for (std::size_t k = 1; k < c.extent.size(); ++k) {
    if (!(c.extent[k - 1] < c.extent[k])) throw StructuralError("cube extent must be sorted without repeats");
  }
}

std::vector<Cube> faces(const Cube& c, long level) {
  const Scalar edge = pow2(-level);
  std::vector<Cube> out{Cube{c.base, {}}};
  for (SequencePoint::Index i : c.extent) {
    std::vector<Cube> next;
    for (const Cube& f : out) {
      Cube keep = f;
      keep.extent.push_back(i);
      next.push_back(std::move(keep));
      next.push_back(f);
      Cube upper = f;
      put(upper.base, i, base_at(f, i) + edge);
      next.push_back(std::move(upper));
    }
    out = std::move(next);
  }
  return out;
}

Cubohedron::Cubohedron(long level, const std::vector<Cube>& cubes) : level_(level) {
  std::set<Cube> all;
  for (const Cube& c : cubes) {
    require_lattice_cube(c, level);
    for (Cube& f : faces(c, level)) all.insert(std::move(f));
  }
  cubes_.assign(all.begin(), all.end());
}

bool Cubohedron::contains(const Cube& c) const { return std::binary_search(cubes_.begin(), cubes_.end(), c); }

std::vector<Cube> Cubohedron::maximal_cubes() const {
  std::set<Cube> proper;
  for (const Cube& c : cubes_) {
    for (Cube& f : faces(c, level_)) {
      if (!(f == c)) proper.insert(std::move(f));
    }
  }
  std::vector<Cube> out;
  for (const Cube& c : cubes_) {
    if (!proper.contains(c)) out.push_back(c);
  }
  return out;
}

Cube carrier(const SequencePoint& x, long level) {
  if (x.tail() != 0) throw PreconditionError("carrier: point does not have finite support");
  const Scalar scale = pow2(level);
  Cube c;
  for (const auto& [i, v] : x.support()) {
    const Scalar q = v * scale;
    if (is_integer(q)) {
      put(c.base, i, v);
    } else {
      put(c.base, i, Scalar(floor_of(q)) / scale);
      c.extent.push_back(i);
    }
  }
  return c;
}

Scalar distance_to_cube(const SequencePoint& x, const Cube& c, long level) {
  const Scalar edge = pow2(-level);
  Scalar best = abs(x.tail());
  for (SequencePoint::Index i : touched(x, c)) best = std::max(best, coordinate_gap(c, i, x.at(i), edge));
  return best;
}

Scalar distance_to_complex(const SequencePoint& x, const Cubohedron& k) {
  if (k.cubes().empty()) throw PreconditionError("distance to an empty complex");
  std::optional<Scalar> best;
  for (const Cube& c : k.cubes()) {
    Scalar d = distance_to_cube(x, c, k.level());
    if (!best || d < *best) best = d;
  }
  return *best;
}

bool cube_contains(const Cube& c, const SequencePoint& x, long level) { return distance_to_cube(x, c, level) == 0; }

bool subcomplex_membership(const SequencePoint& x, const Cubohedron& k) {
  if (x.tail() != 0) return false;
  return k.contains(carrier(x, k.level()));
}

Cubohedron minimal_enclosing_subcomplex(const std::vector<SequencePoint>& points, long level) {
  std::vector<Cube> carriers;
  for (const SequencePoint& p : points) carriers.push_back(carrier(p, level));
  return Cubohedron(level, carriers);
}

RetractReport neighborhood_retract_check(const Cubohedron& k, const std::vector<SequencePoint>& samples, long n) {
  if (n < k.level()) throw PreconditionError("retract check: the homotopy lattice must refine the complex lattice");
  const Scalar band = pow2(-n - 2);
  RetractReport report;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    ++report.samples;
    const bool near = distance_to_complex(samples[s], k) <= band;
    const bool lands = subcomplex_membership(lattice_homotopy(samples[s], 1, n), k);
    if (near) {
      ++report.in_band;
      if (lands) {
        ++report.landed;
      } else if (!report.first_failure) {
        report.first_failure = s;
      }
    } else if (lands) {
      ++report.outside_band_landed;
    }
  }
  return report;
}

}  // namespace unimetric
