// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dirsub/diagnostics.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <limits>

#include "dirsub/errors.h"

namespace dirsub {
namespace {

Eigen::MatrixXd Gaussian(Rng& rng, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.Normal();
  }
  return m;
}

LatticeFunction RandomFunction(const FiniteLattice& l, Rng& rng) {
  std::vector<double> v(l.size());
  for (double& x : v) x = rng.Uniform();
  return LatticeFunction(l, v);
}

// Square root of a random nonnegative weight of the join-irreducibles below
// each element; monotone.
LatticeFunction RandomMonotone(const FiniteLattice& l, Rng& rng) {
  std::vector<double> w;
  for (size_t i = 0; i < l.JoinIrreducibles().size(); ++i) {
    w.push_back(rng.Uniform());
  }
  return LatticeFunction::Tabulate(l, [&](ElementId x) {
    double s = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      if (l.Leq(l.JoinIrreducibles()[i].element(), x)) s += w[i];
    }
    return std::sqrt(s);
  });
}

// Strong gap by a direct reading of the definition: every pair, every
// join-irreducible checked for admissibility on the spot.
double OracleStrongGap(const LatticeFunction& f) {
  const FiniteLattice& l = f.lattice();
  double worst = -std::numeric_limits<double>::infinity();
  for (const ElementId x : l.Elements()) {
    for (const ElementId y : l.Elements()) {
      if (!l.Leq(x, y)) continue;
      for (const ElementId a : l.Elements()) {
        if (!l.IsJoinIrreducible(a) || !l.IsAdmissible(a, x)) continue;
        for (const ElementId b : l.Elements()) {
          if (!l.IsJoinIrreducible(b) || !l.IsAdmissible(b, y)) continue;
          if (!l.Leq(a, b)) continue;
          worst = std::max(worst, (f(l.Join(y, b)) - f(y)) -
                                      (f(l.Join(x, a)) - f(x)));
        }
      }
    }
  }
  return std::max(0.0, worst);
}

// Downward gap by definition, closure recomputed from joins.
double OracleDownwardGap(const LatticeFunction& f) {
  const FiniteLattice& l = f.lattice();
  double worst = -std::numeric_limits<double>::infinity();
  std::vector<ElementId> ji;
  for (const ElementId e : l.Elements()) {
    if (l.IsJoinIrreducible(e)) ji.push_back(e);
  }
  for (const ElementId x : l.Elements()) {
    for (const ElementId y : l.Elements()) {
      if (!l.Leq(x, y)) continue;
      for (const ElementId b : ji) {
        if (!l.IsAdmissible(b, y)) continue;
        double rhs = -std::numeric_limits<double>::infinity();
        for (const ElementId bp : ji) {
          if (!l.IsAdmissible(bp, y) || l.Join(y, bp) != l.Join(y, b)) {
            continue;
          }
          double lo = std::numeric_limits<double>::infinity();
          for (const ElementId a : ji) {
            if (l.IsAdmissible(a, x) && l.Leq(a, bp)) {
              lo = std::min(lo, f(l.Join(x, a)) - f(x));
            }
          }
          if (std::isfinite(lo)) rhs = std::max(rhs, lo);
        }
        if (!std::isfinite(rhs)) continue;
        worst = std::max(worst, f(l.Join(y, b)) - f(y) - rhs);
      }
    }
  }
  return std::max(0.0, worst);
}

TEST(GapTest, ModularFunctionHasZeroGaps) {
  SetLattice s(3);
  auto m3 = TableLattice::Diamond();
  Rng rng(1);
  auto dl = Enumerate(Dictionary::Normalized(Gaussian(rng, 3, 5)));
  for (const FiniteLattice* l :
       std::vector<const FiniteLattice*>{&s, m3.get(), dl.get()}) {
    const auto h = LatticeFunction::Tabulate(
        *l, [&](ElementId x) { return 1.0 * l->Height(x); });
    for (auto dir : {GapDirection::kStrong, GapDirection::kDownward,
                     GapDirection::kUpward}) {
      const GapReport r = MeasureGap(h, dir);
      EXPECT_EQ(r.measured_delta, 0.0) << l->kind();
      EXPECT_GT(r.instances, 0);
    }
  }
}

TEST(GapTest, SquaredCardinalityIsSupermodular) {
  SetLattice l(3);
  const auto f = LatticeFunction::Tabulate(l, [&](ElementId x) {
    const double c = std::popcount(l.Mask(x));
    return c * c;
  });
  for (auto dir : {GapDirection::kStrong, GapDirection::kDownward,
                   GapDirection::kUpward}) {
    const GapReport r = MeasureGap(f, dir);
    // Delta_b(Y) - Delta_b(X) = 2(|Y| - |X|), at most 4.
    EXPECT_DOUBLE_EQ(r.measured_delta, 4.0);
    EXPECT_NEAR(ReevaluateWitness(f, r), r.max_violation, 1e-10);
  }
}

TEST(GapTest, SubmodularSetFunctionHasZeroStrongGap) {
  Rng rng(2);
  SetLattice l(4);
  std::vector<Edge> edges = {{0, 1, 1.0}, {1, 2, 0.5}, {2, 3, 2.0},
                             {3, 0, 0.7}, {0, 2, 0.3}};
  const auto cut =
      CutFunction(l, WeightedDigraph(Gaussian(rng, 2, 4), edges));
  EXPECT_EQ(MeasureStrongGap(cut).measured_delta, 0.0);
}

TEST(GapTest, MatchesIndependentScans) {
  Rng rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    auto l = Enumerate(Dictionary::Normalized(Gaussian(rng, 3, 5)));
    const auto f = trial % 2 ? RandomFunction(*l, rng) : RandomMonotone(*l, rng);
    EXPECT_NEAR(MeasureStrongGap(f).measured_delta, OracleStrongGap(f), 1e-12);
    EXPECT_NEAR(MeasureDownwardGap(f).measured_delta, OracleDownwardGap(f),
                1e-12);
  }
  auto m3 = TableLattice::Diamond();
  const auto g = RandomFunction(*m3, rng);
  EXPECT_NEAR(MeasureStrongGap(g).measured_delta, OracleStrongGap(g), 1e-12);
  EXPECT_NEAR(MeasureDownwardGap(g).measured_delta, OracleDownwardGap(g),
              1e-12);
}

TEST(GapTest, StrongDominatesDirectionalGaps) {
  Rng rng(4);
  std::vector<std::unique_ptr<FiniteLattice>> lattices;
  lattices.push_back(TableLattice::Diamond());
  lattices.push_back(TableLattice::FromCovers(
      5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}));
  for (int i = 0; i < 3; ++i) {
    lattices.push_back(Enumerate(Dictionary::Normalized(Gaussian(rng, 3, 5))));
  }
  lattices.push_back(std::make_unique<SetLattice>(3));
  for (const auto& l : lattices) {
    for (int t = 0; t < 10; ++t) {
      const auto f = RandomFunction(*l, rng);
      const GapReport s = MeasureStrongGap(f);
      const GapReport d = MeasureDownwardGap(f);
      const GapReport u = MeasureUpwardGap(f);
      EXPECT_GE(s.measured_delta + 1e-12,
                std::max(d.measured_delta, u.measured_delta));
      for (const GapReport* r : {&s, &d, &u}) {
        if (r->witness.x >= 0) {
          EXPECT_NEAR(ReevaluateWitness(f, *r), r->max_violation, 1e-10);
        }
      }
    }
  }
}

TEST(GapTest, ProjectionObjectivesOnOrthonormalLattices) {
  Rng rng(5);
  for (int d = 2; d <= 4; ++d) {
    const Eigen::MatrixXd q =
        Eigen::HouseholderQR<Eigen::MatrixXd>(Gaussian(rng, d, d))
            .householderQ();
    auto l = Enumerate(Dictionary(q));
    const DataSet data(Gaussian(rng, d, 30));
    std::vector<Edge> edges;
    for (int e = 0; e < 12; ++e) {
      const int i = static_cast<int>(rng.UniformInt(6));
      const int j = (i + 1 + static_cast<int>(rng.UniformInt(5))) % 6;
      edges.push_back({i, j, rng.Uniform()});
    }
    const Pca pca(data);
    const GeneralizedPca gpca(data, ConcaveRho::CappedLinear());
    const QuantumCut qcut(WeightedDigraph(Gaussian(rng, d, 6), edges));
    for (const SubspaceObjective* f :
         std::vector<const SubspaceObjective*>{&pca, &gpca, &qcut}) {
      const auto t = Tabulate(*f, *l);
      EXPECT_LE(MeasureDownwardGap(t).measured_delta, 1e-10) << f->name();
      EXPECT_LE(MeasureUpwardGap(t).measured_delta, 1e-10) << f->name();
    }
  }
}

TEST(GapTest, TwoLineStrongGapStaysLarge) {
  // X = span(1, 0), Y = span(1, eps), data (0, 1).
  Eigen::MatrixXd u(2, 1);
  u << 0, 1;
  const Pca f{DataSet(u)};
  for (double eps : {0.1, 0.01, 0.001}) {
    Eigen::MatrixXd v(2, 2);
    v << 1, 1, 0, eps;
    auto l = Enumerate(Dictionary::Normalized(v));
    const auto t = Tabulate(f, *l);
    const GapReport r = MeasureStrongGap(t);
    EXPECT_NEAR(r.measured_delta, 1.0 - eps * eps / (1 + eps * eps), 1e-12);
  }
}

TEST(GapTest, SampledStrongGapIsLowerBound) {
  Rng rng(6);
  Eigen::MatrixXd u(2, 1);
  u << 0, 1;
  const Pca f{DataSet(u)};
  const GapReport r = SampleStrongGap(f, 500, rng);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_GT(r.measured_delta, 0.5);
  EXPECT_LE(r.measured_delta, 1.0 + 1e-12);
}

TEST(EquivalenceTest, SetLatticesAndChains) {
  Rng rng(7);
  for (int n : {3, 4}) {
    SetLattice l(n);
    const EquivalenceCheck c = CheckGapEquivalence(l, 50, rng);
    EXPECT_TRUE(c.closures_singleton);
    EXPECT_LE(c.max_disagreement, 1e-12);
    EXPECT_TRUE(c.equivalent);
  }
  auto chain = TableLattice::Chain(4);
  EXPECT_TRUE(CheckGapEquivalence(*chain, 20, rng).equivalent);
}

TEST(EquivalenceTest, DiamondIsRejected) {
  Rng rng(8);
  auto m3 = TableLattice::Diamond();
  EXPECT_FALSE(AllClosuresSingleton(*m3));
  EXPECT_THROW(CheckGapEquivalence(*m3, 5, rng), UsageError);
}

TEST(CoherenceBoundTest, OrthonormalAndThreeVector) {
  const CoherenceBoundCheck o =
      CheckCoherenceBound(Dictionary(Eigen::MatrixXd::Identity(3, 3)));
  EXPECT_EQ(o.bound, 0.0);
  EXPECT_NEAR(o.lattice_coherence, 0.0, 1e-14);
  EXPECT_TRUE(o.holds);

  const double eps = 0.01;
  Eigen::MatrixXd v(2, 3);
  v << 1, 1, 0, 0, eps, 1;
  // mu(V) is nearly 1, so d mu >= 1 and the bound is vacuous.
  const CoherenceBoundCheck t = CheckCoherenceBound(Dictionary::Normalized(v));
  EXPECT_TRUE(t.skipped);
  EXPECT_NEAR(t.vector_coherence, 1 / std::sqrt(1 + eps * eps), 1e-12);
}

TEST(CoherenceBoundTest, LowCoherenceDictionary) {
  // Perturbed identity in R^4: coherence well below 1/4.
  Rng rng(9);
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(4, 4) + 0.02 * Gaussian(rng, 4, 4);
  const CoherenceBoundCheck c = CheckCoherenceBound(Dictionary::Normalized(v));
  EXPECT_FALSE(c.skipped);
  EXPECT_LT(c.vector_coherence, 0.25);
  EXPECT_TRUE(c.holds);
  EXPECT_LE(c.lattice_coherence, c.bound);
}

TEST(CoherenceBoundTest, GapBoundFormula) {
  Eigen::MatrixXd u(2, 2);
  u << 1, 0, 0, 2;
  const Pca pca{DataSet(u)};
  EXPECT_NEAR(CoherenceGapBound(0.1, pca), 3 * 0.1 * 5 / (1 - 0.01), 1e-12);
  const GeneralizedPca g(DataSet(u), ConcaveRho::CappedLinear());
  EXPECT_NEAR(CoherenceGapBound(0.1, g), 3 * 0.1 * 5 / (1 - 0.01), 1e-12);
  EXPECT_TRUE(std::isinf(CoherenceGapBound(1.0, pca)));
}

}  // namespace
}  // namespace dirsub
