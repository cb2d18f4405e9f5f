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
// Acceptance run: one line per criterion, tolerances and instance counts
// pinned below. Exit status is 0 when every criterion passes or is on the
// documented list of statements that no implementation can meet.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "cli_corpus.hpp"
#include "generators.hpp"
#include "unimetric/cubohedra.hpp"
#include "unimetric/embeddings.hpp"
#include "unimetric/geometry.hpp"
#include "unimetric/inverse_limits.hpp"
#include "unimetric/json_io.hpp"
#include "unimetric/oracles.hpp"

namespace unimetric {
namespace {

constexpr int kChainInstances = 200;
constexpr double kChainSeconds = 5;
constexpr int kAdjunctionInstances = 100;
constexpr double kAdjunctionSeconds = 10;
constexpr int kAuInstances = 100;
constexpr int kJoinInstances = 50;
constexpr int kConeSamples = 1000;
constexpr double kConeTol = 1e-9;
constexpr double kSameLevelTol = 1e-12;
constexpr int kAharoniInstances = 50;
constexpr long kAharoniDepth = 4;
constexpr int kRefinementInstances = 100;
constexpr int kModulusFamilies = 50;
constexpr std::size_t kRetractSamples = 500;

// Statements shown to be false for the specified construction; see README.
const std::set<int> kUnattainable = {8};

const std::string kFixtures = UNIMETRIC_FIXTURE_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Json load(const std::string& name) {
  std::ifstream in(kFixtures + "/" + name, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return parse_json(s.str());
}

bool triangle_valid(const DistanceMatrix& d) {
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = 0; b < d.size(); ++b) {
      for (std::size_t c = 0; c < d.size(); ++c) {
        if (d(a, c) > d(a, b) + d(b, c)) return false;
      }
    }
  }
  return true;
}

Outcome chain_metric_oracle() {
  gen::Rng rng(gen::kSeed + 101);
  const auto t0 = std::chrono::steady_clock::now();
  int mismatches = 0, biconditional = 0;
  for (int trial = 0; trial < kChainInstances; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 8);
    const FiniteMetricSpace m = gen::metric(rng, n, 1, 4);
    const Surjection f = gen::surjection(rng, n, gen::uniform(rng, 1, n));
    const DistanceMatrix slow = oracle::quotient_dinf(m, f.class_of, f.class_count);
    const ChainMetric fast = chain_metric(m, f, std::nullopt);
    mismatches += fast.d_infinity != slow;
    for (std::size_t len = 1; len <= 4; ++len) {
      const ChainMetric c = chain_metric(m, f, len);
      biconditional += (c.values == slow) != triangle_valid(c.values);
      biconditional += c.equals_dinf != (c.values == slow);
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && biconditional == 0 && secs < kChainSeconds,
          fmt("%d instances, %d d_inf mismatches, %d biconditional breaks, %.2fs (limit %.0fs)", kChainInstances,
              mismatches, biconditional, secs, kChainSeconds)};
}

Outcome adjunction_theorem() {
  gen::Rng rng(gen::kSeed + 102);
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  for (int trial = 0; trial < kAdjunctionInstances; ++trial) {
    const FiniteMetricSpace x = gen::metric(rng, gen::uniform(rng, 1, 6));
    const FiniteMetricSpace y = gen::metric(rng, gen::uniform(rng, 1, 4));
    const Subset a = gen::subset(rng, x.size(), 1, 3);
    const AdjunctionResult r = adjunction_space(x, y, PartialMap{a, gen::map(rng, a.size(), y.size())});
    bool ok = r.d3_equals_dinf && r.is_metric && r.y_isometric && r.separated_from_y;
    ok = ok && r.d_infinity == oracle::quotient_dinf(r.disjoint, r.surjection.class_of, r.surjection.class_count);
    // Independent scan of d_inf(x, [y]) >= d(x, A) > 0, in the metric X carries inside the gluing.
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (std::binary_search(a.begin(), a.end(), p)) continue;
      const Scalar gap = *r.disjoint.distance_to_set(p, a);
      ok = ok && gap > 0;
      for (std::size_t q = 0; q < y.size(); ++q) {
        ok = ok && r.d_infinity(r.surjection.class_of[p], r.surjection.class_of[x.size() + q]) >= gap;
      }
    }
    bad += !ok;
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < kAdjunctionSeconds,
          fmt("%d instances, %d failing, %.2fs (limit %.0fs)", kAdjunctionInstances, bad, secs, kAdjunctionSeconds)};
}

Outcome alexandroff_urysohn() {
  gen::Rng rng(gen::kSeed + 103);
  int valid = 0, attempts = 0, bad = 0;
  while (valid < kAuInstances && attempts < 20 * kAuInstances) {
    ++attempts;
    const FundamentalSequence seq = gen::fundamental_sequence(rng, gen::uniform(rng, 1, 6), gen::uniform(rng, 1, 6));
    if (!validate_fundamental_sequence(seq).holds) continue;
    ++valid;
    const AuMetrization au = au_metrize(seq);
    bool ok = true;
    for (std::size_t x = 0; x < seq.ground_size; ++x) {
      for (std::size_t y = 0; y < seq.ground_size; ++y) {
        const Scalar f = oracle::au_prefunction(seq, x, y);
        ok = ok && au.pre_distance(x, y) == f && au.space(x, y) <= f && f <= 2 * au.space(x, y);
      }
    }
    bad += !ok;
  }
  return {valid >= kAuInstances && bad == 0,
          fmt("%d valid sequences (%d generated), %d failing d <= f <= 2d", valid, attempts, bad)};
}

Outcome join_coincidence() {
  gen::Rng rng(gen::kSeed + 104);
  const Grid grid = {-1, gen::frac(-1, 2), 0, gen::frac(1, 2), 1};
  int bad = 0;
  Scalar worst = 0;
  for (int trial = 0; trial < kJoinInstances; ++trial) {
    const FiniteMetricSpace x = gen::metric(rng, gen::uniform(rng, 1, 4));
    const FiniteMetricSpace y = gen::metric(rng, gen::uniform(rng, 1, 4));
    const JoinAmalgamReport r = join_amalgam_equality(x, y, grid);
    worst = std::max(worst, r.max_discrepancy);
    bad += !(r.equal && r.max_discrepancy == 0);
  }
  return {bad == 0, fmt("%d instances, 5-point grid, max discrepancy %s", kJoinInstances, format_scalar(worst).c_str())};
}

Outcome cone_comparison() {
  gen::Rng rng(gen::kSeed + 105);
  std::uniform_real_distribution<double> unit(0, 1);
  std::size_t samples = 0, violations = 0;
  double e_over_s = 0, s_over_e = 0;
  for (std::size_t dim = 1; dim <= 4; ++dim) {
    NormedPointSet x{dim, {}, Norm::kSup};
    for (int i = 0; i < 8; ++i) {
      std::vector<Scalar> v;
      for (std::size_t k = 0; k < dim; ++k) v.push_back(gen::frac(static_cast<long>(gen::uniform(rng, 0, 16)) - 8, 8));
      x.points.push_back(v);
    }
    std::vector<ConeSample> batch;
    for (int k = 0; k < kConeSamples / 4; ++k) batch.push_back({gen::uniform(rng, 0, 7), unit(rng), gen::uniform(rng, 0, 7), unit(rng)});
    const ConeComparison r = cone_comparison_bounds(x, batch, kConeTol);
    samples += r.samples;
    violations += r.violations;
    e_over_s = std::max(e_over_s, r.max_e_over_s);
    s_over_e = std::max(s_over_e, r.max_s_over_e);
  }
  double same_level = 0;
  for (int k = 0; k < kConeSamples; ++k) {
    const double d = std::numbers::pi * unit(rng);
    const double t = unit(rng);
    same_level = std::max(same_level, std::abs(euclidean_cone_distance(d, t, t) - 2 * t * std::sin(d / 2)));
  }
  return {samples >= static_cast<std::size_t>(kConeSamples) && violations == 0 && same_level <= kSameLevelTol,
          fmt("%zu pairs in dims 1-4, %zu violations (tol %.0e), max E/S %.3f, max S/E %.3f, same-level error %.1e "
              "(tol %.0e)",
              samples, violations, kConeTol, e_over_s, s_over_e, same_level, kSameLevelTol)};
}

Outcome hyperspace_identity() {
  std::vector<FiniteMetricSpace> spaces;
  for (const char* name : {"two_point.json", "eight_point.json", "one_point.json", "wide_pair.json"}) {
    spaces.push_back(space_from_json(load(name)));
  }
  for (const char* name : {"cone_two_point.json", "quotient_demo.json"}) spaces.push_back(space_from_json(load(name).at("space")));
  for (const char* side : {"x", "y"}) spaces.push_back(space_from_json(load("join_demo.json").at(side)));
  gen::Rng rng(gen::kSeed + 106);
  for (std::size_t n = 3; n <= 8; ++n) spaces.push_back(gen::metric(rng, n));
  std::size_t pairs = 0, bad = 0;
  for (const FiniteMetricSpace& m : spaces) {
    const FiniteMetricSpace h = hausdorff_hyperspace(m);
    for (std::size_t k = 0; k < h.size(); ++k) {
      const Subset a = hyperspace_subset(k, m.size());
      for (std::size_t l = 0; l < h.size(); ++l) {
        ++pairs;
        bad += h(k, l) != oracle::hausdorff_prime(m, a, hyperspace_subset(l, m.size()));
      }
    }
  }
  return {bad == 0, fmt("%zu spaces (<= 8 points), %zu subset pairs, %zu mismatches", spaces.size(), pairs, bad)};
}

Outcome aharoni_certificate() {
  gen::Rng rng(gen::kSeed + 107);
  int bad_rows = 0, bad_range = 0;
  for (int trial = 0; trial < kAharoniInstances; ++trial) {
    const FiniteMetricSpace m = gen::metric(rng, gen::uniform(rng, 1, 8));
    const AharoniEmbedding e = aharoni_embed(m, kAharoniDepth);
    for (long n = 1; n <= kAharoniDepth; ++n) {
      const Scalar threshold = e.lambdas[n - 1] / 2;
      for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t y = 0; y < m.size(); ++y) {
          if (sup_distance(e.images[x], e.images[y]) <= threshold && m(x, y) > pow2(1 - n)) ++bad_rows;
        }
        const std::size_t lo = e.offsets[n - 1];
        for (std::size_t i = lo; i < lo + e.refinements[n - 1].size(); ++i) {
          const Scalar v = e.images[x].at(i);
          if (v < 0 || v > pow2(-n)) ++bad_range;
        }
      }
    }
  }
  return {bad_rows == 0 && bad_range == 0,
          fmt("%d spaces, depth %ld, %d separation breaks, %d coordinates out of range", kAharoniInstances,
              kAharoniDepth, bad_rows, bad_range)};
}

Outcome point_finite_refinement_bound() {
  gen::Rng rng(gen::kSeed + 108);
  int bad = 0, literal_refuted = 0;
  for (int trial = 0; trial < kRefinementInstances; ++trial) {
    const FiniteMetricSpace m = gen::metric(rng, gen::uniform(rng, 2, 10));
    const Scalar r = m.min_positive_distance().value_or(Scalar(1)) * gen::uniform(rng, 1, 3) / 2;
    std::vector<Subset> cs = ball_cover(m, r).sets();
    std::shuffle(cs.begin(), cs.end(), rng);
    const Cover c(m.size(), cs);
    const Cover d = ball_cover(m, 9 * r);
    const PointFiniteRefinement out = point_finite_refinement(d, c);
    bool ok = true, literal = true;
    std::vector<bool> covered(m.size(), false);
    for (std::size_t k = 0; k < out.refinement.size(); ++k) {
      ok = ok && oracle::inside_some_member(d, out.refinement[k]);
      for (std::size_t p : out.refinement[k]) covered[p] = true;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (!intersects(c[i], out.refinement[k])) continue;
        ok = ok && out.source_index[k] <= i;
        literal = literal && i <= out.source_index[k];
      }
    }
    ok = ok && std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    bad += !ok;
    literal_refuted += !literal;
  }
  return {bad == 0 && literal_refuted == 0,
          fmt("%d instances: refines D, covers and n <= i hold on %d; the stated i <= n fails on %d", kRefinementInstances,
              kRefinementInstances - bad, literal_refuted)};
}

Outcome uniform_modulus_check() {
  gen::Rng rng(gen::kSeed + 109);
  int bad = 0;
  for (int trial = 0; trial < kModulusFamilies; ++trial) {
    const FiniteMetricSpace s = gen::metric(rng, gen::uniform(rng, 2, 6));
    const FiniteMetricSpace t = gen::metric(rng, gen::uniform(rng, 1, 5));
    std::vector<TotalMap> family;
    for (std::size_t k = gen::uniform(rng, 1, 10); k > 0; --k) family.push_back(gen::map(rng, s.size(), t.size()));
    const Scalar eps = gen::unit_rational(rng, 4);
    const UniformModulus u = uniform_modulus(s, t, family, eps);
    bool ok = u.all_continuous && u.lipschitz;
    for (std::size_t p = 0; p < family.size(); ++p) {
      ok = ok && u.delta[p] > 0 && is_continuous_at(s, t, family[p], u.delta[p], eps);
      for (std::size_t q = 0; q < family.size(); ++q) {
        ok = ok && abs_diff(u.delta[p], u.delta[q]) <= 6 / eps * map_distance(t, family[p], family[q]);
      }
    }
    bad += !ok;
  }
  return {bad == 0, fmt("%d families of <= 10 maps, %d failing", kModulusFamilies, bad)};
}

Outcome cubohedron_retraction() {
  gen::Rng rng(gen::kSeed + 110);
  std::size_t in_band = 0, landed = 0, fixed_bad = 0, complexes = 0;
  while (in_band < kRetractSamples) {
    ++complexes;
    const long level = static_cast<long>(gen::uniform(rng, 0, 1));
    const Scalar edge = pow2(-level);
    std::vector<Cube> cubes;
    for (std::size_t k = gen::uniform(rng, 1, 20); k > 0; --k) {
      Cube c;
      for (SequencePoint::Index i = 0; i < 5; ++i) {
        const long b = static_cast<long>(gen::uniform(rng, 0, 3)) - 1;
        if (b != 0) c.base[i] = edge * b;
        if (gen::uniform(rng, 0, 3) == 0) c.extent.push_back(i);
      }
      cubes.push_back(c);
    }
    const Cubohedron k(level, cubes);
    const long n = level + static_cast<long>(gen::uniform(rng, 0, 2));
    const Scalar band = pow2(-n - 2);
    std::vector<SequencePoint> samples;
    for (int s = 0; s < 40; ++s) {
      // A point of a random cube pushed by at most the band in each coordinate.
      const Cube& c = cubes[gen::uniform(rng, 0, cubes.size() - 1)];
      std::map<SequencePoint::Index, Scalar> pt;
      for (SequencePoint::Index i = 0; i < 5; ++i) {
        Scalar v = c.base.contains(i) ? c.base.at(i) : Scalar(0);
        if (std::find(c.extent.begin(), c.extent.end(), i) != c.extent.end()) v += edge * gen::frac(gen::uniform(rng, 0, 16), 16);
        v += band * gen::frac(static_cast<long>(gen::uniform(rng, 0, 8)) - 4, 4);
        pt[i] = v;
      }
      samples.emplace_back(pt, 0);
    }
    const RetractReport r = neighborhood_retract_check(k, samples, n);
    in_band += r.in_band;
    landed += r.landed;
    for (const Cube& c : k.cubes()) {
      // Lattice vertices and cell midpoints at scale n.
      std::map<SequencePoint::Index, Scalar> vertex(c.base.begin(), c.base.end());
      std::map<SequencePoint::Index, Scalar> half = vertex;
      for (auto i : c.extent) half[i] = (half.contains(i) ? half[i] : Scalar(0)) + pow2(-n - 1);
      for (const Scalar& t : {Scalar(0), gen::frac(1, 4), gen::frac(1, 2), Scalar(1)}) {
        fixed_bad += !(lattice_homotopy(SequencePoint(vertex), t, n) == SequencePoint(vertex));
        fixed_bad += !(lattice_homotopy(SequencePoint(half), t, n) == SequencePoint(half));
      }
    }
  }
  return {landed == in_band && fixed_bad == 0,
          fmt("%zu complexes (<= 20 cubes, 5 coordinates), %zu in-band samples, %zu landed, %zu moved lattice points",
              complexes, in_band, landed, fixed_bad)};
}

Outcome ladder_fixtures() {
  std::vector<std::string> notes;
  bool ok = true;
  const PerturbationResult exact = perturbation_limit(ladder_from_json(load("ladder_exact.json")));
  bool zero = exact.hypotheses_hold();
  for (const Scalar& c : exact.closeness) zero = zero && c == 0;
  ok = ok && zero;
  const PerturbationResult within = perturbation_limit(ladder_from_json(load("ladder_within_budget.json")));
  ok = ok && within.hypotheses_hold() && within.closeness_ok && within.telescoping_ok;
  const PerturbationResult over = perturbation_limit(ladder_from_json(load("ladder_over_budget.json")));
  const bool detected = over.failure && over.failure->hypothesis == "closeness" && over.failure->level == 2;
  ok = ok && detected;
  const InverseSequenceTruncation divergent = truncation_from_json(load("cauchy_divergent.json"));
  const bool div_ok = !convergence_report(divergent).passed && cauchy_report(divergent).passed;
  const InverseSequenceTruncation windowed = truncation_from_json(load("windowed_integers.json"));
  const bool win_ok = !cauchy_report(windowed, std::vector<Scalar>{gen::frac(1, 2)}).passed;
  ok = ok && div_ok && win_ok;
  return {ok, fmt("exact closeness 0: %s; within budget 2beta: %s; over budget caught at level 2: %s; "
                  "divergent chain converge fail/cauchy pass: %s; windowed chain not Cauchy: %s",
                  zero ? "yes" : "no", within.closeness_ok ? "yes" : "no", detected ? "yes" : "no",
                  div_ok ? "yes" : "no", win_ok ? "yes" : "no")};
}

Outcome cli_determinism() {
  std::size_t runs = 0, code_bad = 0, diff = 0;
  for (const corpus::Case& c : corpus::cases()) {
    std::vector<std::string> args = corpus::resolve(c, kFixtures);
    args.insert(args.begin(), {"--seed", "20261018"});
    std::ostringstream a, b, err;
    const int first = run_cli(args, a, err);
    const int second = run_cli(args, b, err);
    runs += 2;
    code_bad += (first != c.exit_code) + (second != c.exit_code);
    diff += a.str() != b.str();
  }
  return {code_bad == 0 && diff == 0,
          fmt("%zu commands run twice, %zu exit-code mismatches, %zu non-identical report pairs", runs / 2, code_bad, diff)};
}

}  // namespace
}  // namespace unimetric

int main() {
  using namespace unimetric;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"chain-metric oracle equivalence", chain_metric_oracle},
      {"adjunction theorem", adjunction_theorem},
      {"Alexandroff-Urysohn d <= f <= 2d", alexandroff_urysohn},
      {"join coincidence", join_coincidence},
      {"cone comparison", cone_comparison},
      {"hyperspace identity", hyperspace_identity},
      {"Aharoni certificate", aharoni_certificate},
      {"point-finite refinement", point_finite_refinement_bound},
      {"uniform modulus", uniform_modulus_check},
      {"cubohedron retraction", cubohedron_retraction},
      {"inverse-limit ladder", ladder_fixtures},
      {"CLI determinism", cli_determinism},
  };
  int unexpected = 0, passed = 0;
  std::vector<int> known_red;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d  %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", criteria[k].first, o.detail.c_str());
    if (o.pass) {
      ++passed;
    } else if (kUnattainable.contains(id)) {
      known_red.push_back(id);
    } else {
      ++unexpected;
    }
  }
  std::printf("%d of %zu criteria pass", passed, criteria.size());
  for (int id : known_red) std::printf("; criterion %d fails as documented (statement refuted)", id);
  std::printf("\n");
  return unexpected == 0 ? 0 : 1;
}
