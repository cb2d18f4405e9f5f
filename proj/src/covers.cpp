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

#include "unimetric/covers.hpp"

#include <algorithm>

namespace unimetric {

namespace {

std::string describe(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void require_same_ground(const Cover& c, const Cover& d) {
  if (c.ground_size() != d.ground_size()) {
    throw StructuralError("covers live on ground sets of sizes " + std::to_string(c.ground_size()) + " and " +
                          std::to_string(d.ground_size()));
  }
}

RefinementVerdict family_refines(const std::vector<Subset>& family, const Cover& d, const std::string& what) {
  for (const Subset& s : family) {
    bool inside = std::any_of(d.sets().begin(), d.sets().end(), [&](const Subset& v) { return contains_all(v, s); });
    if (!inside) return {false, s, what + " " + describe(s) + " lies in no member"};
  }
  return {};
}

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, Subset& r, Subset p, Subset x, std::vector<Subset>& out) {
  if (p.empty() && x.empty()) {
    Subset clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  // Pivot on the vertex with the most neighbours in p.
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const Subset* pool : {&p, &x}) {
    for (std::size_t u : *pool) {
      std::size_t count = std::count_if(p.begin(), p.end(), [&](std::size_t v) { return adj[u][v]; });
      if (count > best) {
        best = count;
        pivot = u;
      }
    }
  }
  Subset candidates;
  for (std::size_t v : p) {
    if (!adj[pivot][v]) candidates.push_back(v);
  }
  for (std::size_t v : candidates) {
    Subset np, nx;
    for (std::size_t u : p) {
      if (adj[v][u]) np.push_back(u);
    }
    for (std::size_t u : x) {
      if (adj[v][u]) nx.push_back(u);
    }
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

Cover::Cover(std::size_t ground_size, std::vector<Subset> sets) : ground_size_(ground_size) {
  std::vector<bool> covered(ground_size, false);
  for (Subset& s : sets) {
    if (s.empty()) throw StructuralError("cover has an empty member");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.back() >= ground_size) throw StructuralError("cover member " + describe(s) + " leaves the ground set");
    for (std::size_t x : s) covered[x] = true;
    if (std::find(sets_.begin(), sets_.end(), s) == sets_.end()) sets_.push_back(std::move(s));
  }
  for (std::size_t x = 0; x < ground_size; ++x) {
    if (!covered[x]) throw StructuralError("point " + std::to_string(x) + " is not covered");
  }
}

bool contains_all(const Subset& outer, const Subset& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool intersects(const Subset& a, const Subset& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

RefinementVerdict refines(const Cover& c, const Cover& d) {
  require_same_ground(c, d);
  return family_refines(c.sets(), d, "member");
}

Subset star(const Subset& t, const Cover& c) {
  Subset sorted = t;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> in(c.ground_size(), false);
  for (std::size_t x : sorted) {
    if (x >= c.ground_size()) throw StructuralError("star: point outside the ground set");
  }
  for (const Subset& u : c.sets()) {
    if (intersects(u, sorted)) {
      for (std::size_t x : u) in[x] = true;
    }
  }
  Subset out;
  for (std::size_t x = 0; x < in.size(); ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

RefinementVerdict star_refines(const Cover& c, const Cover& d) {
  require_same_ground(c, d);
  std::vector<Subset> stars;
  for (std::size_t x = 0; x < c.ground_size(); ++x) stars.push_back(star({x}, c));
  return family_refines(stars, d, "point star");
}

RefinementVerdict strong_star_refines(const Cover& c, const Cover& d) {
  require_same_ground(c, d);
  std::vector<Subset> stars;
  for (const Subset& u : c.sets()) stars.push_back(star(u, c));
  return family_refines(stars, d, "member star");
}

Cover meet(const Cover& c, const Cover& d) {
  require_same_ground(c, d);
  std::vector<Subset> sets;
  for (const Subset& u : c.sets()) {
    for (const Subset& v : d.sets()) {
      Subset w;
      std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(w));
      if (!w.empty()) sets.push_back(std::move(w));
    }
  }
  return Cover(c.ground_size(), std::move(sets));
}

Cover ball_cover(const FiniteMetricSpace& m, const Scalar& r) {
  if (r <= 0) throw PreconditionError("ball radius must be positive");
  std::vector<Subset> sets;
  for (std::size_t x = 0; x < m.size(); ++x) {
    Subset ball;
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (m(x, y) <= r) ball.push_back(y);
    }
    sets.push_back(std::move(ball));
  }
  return Cover(m.size(), std::move(sets));
}

std::vector<Subset> maximal_cliques(const std::vector<std::vector<bool>>& adjacent) {
  std::vector<Subset> out;
  Subset r;
  Subset p;
  for (std::size_t v = 0; v < adjacent.size(); ++v) p.push_back(v);
  if (p.empty()) return out;
  bron_kerbosch(adjacent, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

RefinementVerdict diameter_sets_refine(const FiniteMetricSpace& m, const Scalar& r, const Cover& c) {
  if (c.ground_size() != m.size()) throw StructuralError("cover and space have different sizes");
  std::vector<std::vector<bool>> adj(m.size(), std::vector<bool>(m.size(), false));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) adj[i][j] = i != j && m(i, j) <= r;
  }
  return family_refines(maximal_cliques(adj), c, "set of diameter <= " + format_scalar(r));
}

LebesgueNumber lebesgue_number(const Cover& c, const FiniteMetricSpace& m) {
  if (c.ground_size() != m.size()) throw StructuralError("cover and space have different sizes");
  // The smallest diameter of a set inside no member is the Lebesgue number:
  // every smaller set is inside a member, and no larger threshold works.
  for (const Scalar& s : m.spectrum()) {
    if (!diameter_sets_refine(m, s, c).holds) return {false, s};
  }
  return {true, 0};
}

std::size_t multiplicity(const Cover& c) {
  auto counts = is_point_finite(c).counts;
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

FinitenessReport is_point_finite(const Cover& c) {
  FinitenessReport report;
  report.counts.assign(c.ground_size(), 0);
  for (const Subset& u : c.sets()) {
    for (std::size_t x : u) ++report.counts[x];
  }
  return report;
}

FinitenessReport is_star_finite(const Cover& c) {
  FinitenessReport report;
  report.counts.assign(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i != j && intersects(c[i], c[j])) ++report.counts[i];
    }
  }
  return report;
}

RefinementVerdict validate_fundamental_sequence(const FundamentalSequence& seq) {
  if (seq.covers.size() < 2) return {false, std::nullopt, "a fundamental sequence needs at least two covers"};
  for (const Cover& c : seq.covers) {
    if (c.ground_size() != seq.ground_size) return {false, std::nullopt, "cover on the wrong ground set"};
  }
  for (std::size_t n = 0; n + 1 < seq.covers.size(); ++n) {
    RefinementVerdict v = star_refines(seq.covers[n + 1], seq.covers[n]);
    if (!v.holds) {
      v.reason = "C_" + std::to_string(n + 2) + " does not star-refine C_" + std::to_string(n + 1) + ": " + v.reason;
      return v;
    }
  }
  for (std::size_t x = 0; x < seq.ground_size; ++x) {
    for (std::size_t y = x + 1; y < seq.ground_size; ++y) {
      Subset pair{x, y};
      bool separated = std::any_of(seq.covers.begin(), seq.covers.end(), [&](const Cover& c) {
        return std::none_of(c.sets().begin(), c.sets().end(), [&](const Subset& u) { return contains_all(u, pair); });
      });
      if (!separated) return {false, pair, "no cover separates " + describe(pair)};
    }
  }
  return {};
}

AuMetrization au_metrize(const FundamentalSequence& seq) {
  RefinementVerdict valid = validate_fundamental_sequence(seq);
  if (!valid.holds) throw PreconditionError("invalid fundamental sequence: " + valid.reason);
  const std::size_t n = seq.ground_size;
  const std::size_t k = seq.covers.size();

  AuMetrization out;
  out.pre_distance = DistanceMatrix(n, Scalar(1));
  for (std::size_t x = 0; x < n; ++x) out.pre_distance(x, x) = 0;
  for (std::size_t level = 1; 2 * level <= k; ++level) {
    const Scalar weight = pow2(-static_cast<long>(level));
    for (const Subset& u : seq.covers[2 * level - 1].sets()) {
      for (std::size_t x : u) {
        for (std::size_t y : u) {
          if (x != y && weight < out.pre_distance(x, y)) out.pre_distance(x, y) = weight;
        }
      }
    }
  }
  std::vector<std::string> labels = seq.labels;
  if (labels.empty()) {
    for (std::size_t x = 0; x < n; ++x) labels.push_back(std::to_string(x));
  }
  out.space = FiniteMetricSpace(std::move(labels), shortest_paths(out.pre_distance));

  out.d_le_f = true;
  out.f_le_2d = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      out.d_le_f = out.d_le_f && out.space(x, y) <= out.pre_distance(x, y);
      out.f_le_2d = out.f_le_2d && out.pre_distance(x, y) <= 2 * out.space(x, y);
    }
  }
  out.certified = out.d_le_f && out.f_le_2d;
  for (std::size_t level = 1; 2 * level <= k; ++level) {
    const Scalar radius = pow2(-static_cast<long>(level));
    RefinementVerdict small{};
    for (const Subset& u : seq.covers[2 * level - 1].sets()) {
      for (std::size_t x : u) {
        for (std::size_t y : u) {
          if (small.holds && out.space(x, y) > radius) {
            small = {false, u, "member " + describe(u) + " has d-diameter above " + format_scalar(radius)};
          }
        }
      }
    }
    out.c_refines_d.push_back(small);
    out.d_refines_c.push_back(diameter_sets_refine(out.space, radius / 2, seq.covers[2 * level - 2]));
    out.certified = out.certified && out.c_refines_d.back().holds && out.d_refines_c.back().holds;
  }
  return out;
}

PointFiniteRefinement point_finite_refinement(const Cover& d, const Cover& c, const std::optional<Cover>& intermediate) {
  require_same_ground(c, d);
  Cover b;
  if (intermediate) {
    require_same_ground(c, *intermediate);
    b = *intermediate;
    if (auto v = strong_star_refines(c, b); !v.holds) {
      throw PreconditionError("C is not a strong star-refinement of the intermediate cover: " + v.reason);
    }
  } else {
    std::vector<Subset> stars;
    for (const Subset& u : c.sets()) stars.push_back(star(u, c));
    b = Cover(c.ground_size(), std::move(stars));
  }
  if (auto v = strong_star_refines(b, d); !v.holds) {
    throw PreconditionError("the intermediate cover is not a strong star-refinement of D: " + v.reason);
  }

  PointFiniteRefinement out;
  std::vector<bool> claimed(c.ground_size(), false);
  std::vector<Subset> members;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Subset w;
    for (std::size_t x : star(c[i], c)) {
      if (!claimed[x]) w.push_back(x);
    }
    for (std::size_t x : w) claimed[x] = true;
    if (w.empty()) continue;
    members.push_back(star(w, c));
    out.source_index.push_back(i);
  }
  // Distinct W_n have distinct stars only generically; keep one entry per W_n.
  out.refinement = Cover(c.ground_size(), members);
  if (out.refinement.size() != members.size()) {
    std::vector<std::size_t> kept;
    std::vector<Subset> seen;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (std::find(seen.begin(), seen.end(), members[k]) == seen.end()) {
        seen.push_back(members[k]);
        kept.push_back(out.source_index[k]);
      }
    }
    out.source_index = std::move(kept);
  }
  out.refines_d = refines(out.refinement, d).holds;
  std::vector<bool> covered(c.ground_size(), false);
  for (const Subset& v : out.refinement.sets()) {
    for (std::size_t x : v) covered[x] = true;
  }
  out.covers_ground = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  out.index_bound = true;
  for (std::size_t i = 0; i < c.size() && out.index_bound; ++i) {
    for (std::size_t k = 0; k < out.refinement.size(); ++k) {
      if (intersects(c[i], out.refinement[k]) && i < out.source_index[k]) {
        out.index_bound = false;
        out.index_witness = std::make_pair(i, out.source_index[k]);
        break;
      }
    }
  }
  return out;
}

}  // namespace unimetric
