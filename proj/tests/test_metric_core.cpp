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

#include <gtest/gtest.h>

#include "generators.hpp"
#include "unimetric/metric_space.hpp"
#include "unimetric/maps.hpp"
#include "unimetric/oracles.hpp"
#include "unimetric/sequence_point.hpp"

namespace unimetric {
namespace {

Scalar q(const char* s) { return parse_scalar(s); }

FiniteMetricSpace two_point(const Scalar& d = 1) { return make_space({{0, d}, {d, 0}}); }

TEST(Scalar, ParsesFractionsAndDecimals) {
  EXPECT_EQ(q("6/8"), Scalar(3, 4));
  EXPECT_EQ(q("-0.25"), Scalar(-1, 4));
  EXPECT_EQ(q("7"), Scalar(7));
  EXPECT_EQ(format_scalar(Scalar(3, 4)), "3/4");
  EXPECT_EQ(format_scalar(Scalar(2)), "2/1");
  EXPECT_THROW(q("1/0"), StructuralError);
  EXPECT_THROW(q("x"), StructuralError);
  EXPECT_THROW(q(""), StructuralError);
}

TEST(Axioms, TwoPointSpacePasses) { EXPECT_TRUE(check_metric_axioms(two_point()).passed); }

TEST(Axioms, ZeroDistanceIsAPositivityViolation) {
  const FiniteMetricSpace m = two_point(0);
  const AxiomReport r = check_metric_axioms(m);
  ASSERT_FALSE(r.passed);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].axiom, "positivity");
  EXPECT_EQ(r.violations[0].witness, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(check_metric_axioms(m, true).passed);
}

TEST(Axioms, TriangleWitnessIsLexicographicallyFirst) {
  const FiniteMetricSpace m = make_space({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
  const AxiomReport r = check_metric_axioms(m);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].axiom, "triangle");
  EXPECT_EQ(r.violations[0].witness, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.violations[0].lhs, 3);
  EXPECT_EQ(r.violations[0].rhs, 2);
}

TEST(Axioms, AsymmetryAndShapeErrors) {
  const FiniteMetricSpace m = make_space({{0, 1}, {2, 0}});
  EXPECT_EQ(check_metric_axioms(m).violations[0].axiom, "symmetry");
  EXPECT_THROW(FiniteMetricSpace({"a"}, DistanceMatrix(2)), StructuralError);
}

TEST(Product, TwoPointExamples) {
  const FiniteMetricSpace m = two_point();
  const FiniteMetricSpace linf = product_metric(m, m, ProductNorm::kLinf);
  const FiniteMetricSpace l1 = product_metric(m, m, ProductNorm::kL1);
  const FiniteMetricSpace l2 = product_metric(m, m, ProductNorm::kL2Squared);
  // (0,0) is index 0 and (1,1) index 3.
  EXPECT_EQ(linf(0, 3), 1);
  EXPECT_EQ(l1(0, 3), 2);
  EXPECT_EQ(l2(0, 3), 2);
  EXPECT_NEAR(float_view(l2, true)[0][3], 1.4142135623730951, 1e-15);
  EXPECT_EQ(linf.label(3), "(1,1)");
}

TEST(Product, OnePointFactorIsIsometric) {
  gen::Rng rng(gen::kSeed);
  const FiniteMetricSpace m = gen::metric(rng, 5);
  const FiniteMetricSpace one = make_space({{0}});
  for (auto norm : {ProductNorm::kL1, ProductNorm::kLinf}) {
    EXPECT_EQ(product_metric(m, one, norm).matrix(), m.matrix());
  }
}

TEST(Product, NormChainProperty) {
  gen::Rng rng(gen::kSeed + 1);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteMetricSpace a = gen::metric(rng, gen::uniform(rng, 1, 4));
    const FiniteMetricSpace b = gen::metric(rng, gen::uniform(rng, 1, 4));
    const FiniteMetricSpace linf = product_metric(a, b, ProductNorm::kLinf);
    const FiniteMetricSpace l1 = product_metric(a, b, ProductNorm::kL1);
    ASSERT_TRUE(check_metric_axioms(linf).passed);
    ASSERT_TRUE(check_metric_axioms(l1).passed);
    for (std::size_t i = 0; i < l1.size(); ++i) {
      for (std::size_t j = 0; j < l1.size(); ++j) {
        ASSERT_LE(linf(i, j), l1(i, j));
        ASSERT_LE(l1(i, j), 2 * linf(i, j));
      }
    }
  }
}

TEST(DisjointUnion, CrossDistanceIsOne) {
  gen::Rng rng(gen::kSeed + 2);
  const FiniteMetricSpace m = gen::metric(rng, 3);
  const FiniteMetricSpace n = gen::metric(rng, 4);
  const FiniteMetricSpace u = disjoint_union_metric(m, n);
  ASSERT_TRUE(check_metric_axioms(u).passed);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(u(i, j), m(i, j));
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(u(i, 3 + j), 1);
  }
  EXPECT_THROW(disjoint_union_metric(two_point(2), n), PreconditionError);
}

TEST(WeightedSup, Examples) {
  const std::vector<FiniteMetricSpace> one{two_point()};
  EXPECT_EQ(weighted_sup_metric(one)(0, 1), Scalar(1, 2));
  const std::vector<FiniteMetricSpace> two{two_point(), two_point()};
  const FiniteMetricSpace w = weighted_sup_metric(two);
  EXPECT_EQ(w(0, 3), Scalar(1, 2));
  EXPECT_EQ(w(0, 1), Scalar(1, 4));
  EXPECT_EQ(w(2, 2), 0);
  const std::vector<FiniteMetricSpace> wide{two_point(2)};
  EXPECT_THROW(weighted_sup_metric(wide), PreconditionError);
}

TEST(Hyperspace, SingletonsAndDiagonal) {
  const FiniteMetricSpace m = make_space({{0, q("1/2"), 2}, {q("1/2"), 0, q("3/2")}, {2, q("3/2"), 0}});
  const FiniteMetricSpace h = hausdorff_hyperspace(m);
  ASSERT_EQ(h.size(), 7u);
  // Masks 1, 2, 4 are the singletons {0}, {1}, {2}.
  EXPECT_EQ(h(0, 1), Scalar(1, 2));
  EXPECT_EQ(h(0, 3), 1);
  EXPECT_EQ(hyperspace_subset(3, 3), (Subset{2}));
  for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(h(i, i), 0);
  EXPECT_THROW(hausdorff_hyperspace(m, 2), PreconditionError);
}

TEST(Hyperspace, IdentityAgainstOracle) {
  gen::Rng rng(gen::kSeed + 3);
  const FiniteMetricSpace m = gen::metric(rng, 8, 2);
  const FiniteMetricSpace h = hausdorff_hyperspace(m);
  for (std::size_t a = 0; a < h.size(); ++a) {
    for (std::size_t b = 0; b < h.size(); ++b) {
      ASSERT_EQ(h(a, b), oracle::hausdorff_prime(m, hyperspace_subset(a, 8), hyperspace_subset(b, 8)));
    }
  }
}

TEST(Kuratowski, OnePointIsZero) {
  const auto v = kuratowski_embed(make_space({{0}}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], SequencePoint());
}

TEST(Kuratowski, LineExample) {
  const FiniteMetricSpace m = make_space({{0, q("1/2"), 1}, {q("1/2"), 0, q("1/2")}, {1, q("1/2"), 0}});
  const auto v = kuratowski_embed(m);
  EXPECT_EQ(v[0].at(1), Scalar(1, 2));
  EXPECT_EQ(v[0].at(2), 1);
  EXPECT_EQ(v[1].at(0), Scalar(1, 2));
  EXPECT_EQ(sup_distance(v[0], v[1]), Scalar(1, 2));
  EXPECT_EQ(sup_distance(v[0], v[2]), 1);
}

TEST(Kuratowski, IsometryProperty) {
  gen::Rng rng(gen::kSeed + 4);
  for (int trial = 0; trial < 30; ++trial) {
    const FiniteMetricSpace m = gen::metric(rng, gen::uniform(rng, 1, 7));
    const auto v = kuratowski_embed(m);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) ASSERT_EQ(sup_distance(v[i], v[j]), m(i, j));
    }
  }
  EXPECT_THROW(kuratowski_embed(two_point(3)), PreconditionError);
}

TEST(McShane, Examples) {
  gen::Rng rng(gen::kSeed + 5);
  const FiniteMetricSpace m = gen::metric(rng, 6);
  const Subset all{0, 1, 2, 3, 4, 5};
  std::vector<Scalar> g;
  for (std::size_t i = 0; i < 6; ++i) g.push_back(m(i, 0) / 2);
  EXPECT_EQ(mcshane_extend(m, all, g, 1), g);
  const std::vector<Scalar> constant(2, Scalar(1, 3));
  for (const Scalar& v : mcshane_extend(m, Subset{1, 4}, constant, 0)) EXPECT_EQ(v, Scalar(1, 3));
  // With L = 1 the extension of a constant is c + d(x, A).
  const auto lifted = mcshane_extend(m, Subset{1, 4}, constant, 1);
  for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(lifted[x], Scalar(1, 3) + std::min(m(x, 1), m(x, 4)));
  const std::vector<Scalar> bad{0, 5};
  EXPECT_THROW(mcshane_extend(m, Subset{1, 4}, bad, 1), PreconditionError);
}

TEST(McShane, LipschitzProperty) {
  gen::Rng rng(gen::kSeed + 6);
  for (int trial = 0; trial < 40; ++trial) {
    const FiniteMetricSpace m = gen::metric(rng, gen::uniform(rng, 2, 8));
    const Subset a = gen::subset(rng, m.size(), 1, m.size());
    std::vector<Scalar> g;
    for (std::size_t p : a) g.push_back(m(p, a.front()));
    const auto ext = mcshane_extend(m, a, g, 1);
    for (std::size_t k = 0; k < a.size(); ++k) ASSERT_EQ(ext[a[k]], g[k]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) ASSERT_LE(abs_diff(ext[i], ext[j]), m(i, j));
    }
  }
}

TEST(ExtendMetric, WholeSpaceReturnsInput) {
  gen::Rng rng(gen::kSeed + 7);
  const FiniteMetricSpace m = gen::metric(rng, 4);
  const FiniteMetricSpace d = gen::metric(rng, 4);
  EXPECT_EQ(extend_metric(m, Subset{0, 1, 2, 3}, d).matrix(), d.matrix());
}

TEST(ExtendMetric, RestrictionAndAxiomsProperty) {
  gen::Rng rng(gen::kSeed + 8);
  for (int trial = 0; trial < 60; ++trial) {
    const FiniteMetricSpace m = gen::metric(rng, gen::uniform(rng, 2, 7));
    const Subset a = gen::subset(rng, m.size(), 1, m.size() - 1);
    const FiniteMetricSpace d = gen::coin(rng) ? m.restrict_to(a) : gen::metric(rng, a.size());
    const FiniteMetricSpace e = extend_metric(m, a, d);
    ASSERT_TRUE(check_metric_axioms(e).passed);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) ASSERT_EQ(e(a[i], a[j]), d(i, j));
    }
  }
}

TEST(ExtendMetric, RejectsNonMetricOnSubset) {
  const FiniteMetricSpace m = make_space({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_THROW(extend_metric(m, Subset{0, 1}, two_point(0)), PreconditionError);
}

TEST(Modulus, IdentityAndConstant) {
  gen::Rng rng(gen::kSeed + 9);
  const FiniteMetricSpace m = gen::metric(rng, 5);
  for (const ModulusRow& row : continuity_modulus(m, m, identity_map(5)).rows) EXPECT_EQ(row.delta, row.epsilon);
  const FiniteMetricSpace pt = make_space({{0}});
  for (const ModulusRow& row : continuity_modulus(m, pt, TotalMap(5, 0)).rows) EXPECT_EQ(row.epsilon, 0);
  const ModulusTable sep = separation_modulus(m, pt, TotalMap(5, 0));
  for (const ModulusRow& row : sep.rows) EXPECT_GE(row.epsilon, m.diameter());
  for (const Scalar& e : sep.unattained) EXPECT_LT(e, m.diameter());
  EXPECT_FALSE(sep.unattained.empty());
}

TEST(Modulus, FoldMatchesExhaustiveEnumeration) {
  const FiniteMetricSpace m = make_space({{0, 1, 2, 3}, {1, 0, 1, 2}, {2, 1, 0, 1}, {3, 2, 1, 0}});
  const FiniteMetricSpace t = make_space({{0, 1}, {1, 0}});
  const TotalMap fold{0, 1, 1, 0};
  const ModulusTable c = continuity_modulus(m, t, fold);
  ASSERT_EQ(c.rows.size(), 3u);
  for (const ModulusRow& row : c.rows) {
    Scalar worst = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (m(i, j) <= row.delta) worst = std::max(worst, t(fold[i], fold[j]));
      }
    }
    EXPECT_EQ(row.epsilon, worst);
  }
  const ModulusTable s = separation_modulus(m, t, fold);
  for (const ModulusRow& row : s.rows) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (t(fold[i], fold[j]) <= row.delta) EXPECT_LE(m(i, j), row.epsilon);
      }
    }
  }
  // Points 0 and 3 share an image at distance 3.
  ASSERT_FALSE(s.rows.empty());
  EXPECT_EQ(s.rows.front().epsilon, 3);
  EXPECT_EQ(s.unattained, (std::vector<Scalar>{0, 1, 2}));
}

TEST(Modulus, RowsAreMonotone) {
  gen::Rng rng(gen::kSeed + 10);
  for (int trial = 0; trial < 40; ++trial) {
    const FiniteMetricSpace a = gen::metric(rng, gen::uniform(rng, 2, 6));
    const FiniteMetricSpace b = gen::metric(rng, gen::uniform(rng, 1, 5));
    const TotalMap f = gen::map(rng, a.size(), b.size());
    for (const ModulusTable& t : {continuity_modulus(a, b, f), separation_modulus(a, b, f)}) {
      for (std::size_t i = 1; i < t.rows.size(); ++i) {
        ASSERT_LE(t.rows[i - 1].delta, t.rows[i].delta);
        ASSERT_LE(t.rows[i - 1].epsilon, t.rows[i].epsilon);
      }
      for (const ModulusRow& row : t.rows) ASSERT_TRUE(is_continuous_at(a, b, f, row.delta, row.epsilon) ||
                                                       is_separating_at(a, b, f, row.epsilon, row.delta));
    }
  }
}

}  // namespace
}  // namespace unimetric
