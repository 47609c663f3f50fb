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

#include "dirsub/objectives.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "dirsub/errors.h"
#include "dirsub/rng.h"

namespace dirsub {
namespace {

Eigen::MatrixXd Gaussian(Rng& rng, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.Normal();
  }
  return m;
}

WeightedDigraph RandomGraph(Rng& rng, const Eigen::MatrixXd& vertices,
                            double density) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(vertices.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && rng.Uniform() < density) {
        edges.push_back({i, j, rng.Uniform()});
      }
    }
  }
  return WeightedDigraph(vertices, edges);
}

TEST(DataSetTest, SecondMomentAndNorms) {
  Eigen::MatrixXd u(2, 2);
  u << 1, 0, 2, 3;
  const DataSet data(u);
  EXPECT_DOUBLE_EQ(data.norms_sq()(0), 5.0);
  EXPECT_DOUBLE_EQ(data.SecondMoment()(1, 1), 13.0);
  EXPECT_THROW(DataSet(u, Eigen::VectorXd::Ones(3)), UsageError);
}

TEST(PcaTest, BottomTopAndTraceForm) {
  Rng rng(1);
  const Eigen::MatrixXd u = Gaussian(rng, 5, 20);
  const Pca f{DataSet(u)};
  EXPECT_EQ(f.Value(Subspace::Bottom(5)), 0.0);
  EXPECT_NEAR(f.Value(Subspace::Top(5)), u.squaredNorm(), 1e-9);
  const Eigen::MatrixXd m = u * u.transpose();
  for (int trial = 0; trial < 10; ++trial) {
    const Subspace x = Subspace::Span(Gaussian(rng, 5, 1 + trial % 4));
    // Independent projector from a QR factorization of the basis.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(x.basis());
    const Eigen::MatrixXd q = qr.householderQ() *
                              Eigen::MatrixXd::Identity(5, x.dim());
    const double trace = (q * q.transpose() * m).trace();
    EXPECT_NEAR(f.Value(x), trace, 1e-9 * trace);
  }
}

TEST(PcaTest, MonotoneAlongChains) {
  Rng rng(2);
  const Pca f{DataSet(Gaussian(rng, 4, 15))};
  for (int trial = 0; trial < 10; ++trial) {
    Subspace x = Subspace::Bottom(4);
    double prev = 0.0;
    for (int k = 0; k < 4; ++k) {
      x = Join(x, Direction::FromVector(Gaussian(rng, 4, 1)));
      const double v = f.Value(x);
      EXPECT_GE(v, prev - 1e-12);
      prev = v;
    }
  }
}

TEST(PcaTest, MarginalOfTopEigenvector) {
  Rng rng(3);
  const Eigen::MatrixXd u = Gaussian(rng, 4, 30);
  const Pca f{DataSet(u)};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(u * u.transpose());
  const Direction top = Direction::FromVector(eig.eigenvectors().col(3));
  EXPECT_NEAR(Marginal(f, Subspace::Bottom(4), top), eig.eigenvalues()(3),
              1e-9);
  const Subspace x = top.AsSubspace();
  EXPECT_THROW(Marginal(f, x, top), UsageError);
}

TEST(PcaTest, MarginalEqualsQuadraticFormOfResidual) {
  Rng rng(4);
  const Eigen::MatrixXd u = Gaussian(rng, 5, 12);
  const Pca f{DataSet(u)};
  const Eigen::MatrixXd m = u * u.transpose();
  for (int trial = 0; trial < 10; ++trial) {
    const Subspace x = Subspace::Span(Gaussian(rng, 5, 2));
    const Direction a = Direction::FromVector(Gaussian(rng, 5, 1));
    const Eigen::VectorXd r = ResidualDirection(a, x).vector();
    EXPECT_NEAR(Marginal(f, x, a), r.dot(m * r), 1e-9);
    // Closure invariance.
    const VectorClosure cl(x, a);
    EXPECT_NEAR(Marginal(f, x, cl.Sample(rng)), Marginal(f, x, a), 1e-9);
  }
}

TEST(ConcaveRhoTest, Builtins) {
  const ConcaveRho cap = ConcaveRho::CappedLinear(0.01, 0.1);
  EXPECT_DOUBLE_EQ(cap.Eval(0, 0.005, 1.0), 0.005);
  EXPECT_NEAR(cap.Eval(0, 0.11, 1.0), 0.1 * 0.1 + 0.01, 1e-15);
  // Per-datum threshold scales with ||u||^2.
  EXPECT_NEAR(cap.Eval(0, 0.5, 4.0), 0.1 * (0.5 - 0.04) + 0.04, 1e-15);
  EXPECT_DOUBLE_EQ(cap.Slope0(0, 1.0), 1.0);
  EXPECT_NEAR(ConcaveRho::Log1p().Slope0(0, 1.0), 1.0, 1e-7);
  EXPECT_EQ(ConcaveRho::Builtin("log1p").kind(), ConcaveRho::Kind::kLog1p);
  EXPECT_THROW(ConcaveRho::Builtin("square"), ValidationError);
}

TEST(ConcaveRhoTest, KnotsValidated) {
  const ConcaveRho k = ConcaveRho::Knots({{1.0, 1.0}, {3.0, 2.0}});
  EXPECT_DOUBLE_EQ(k.Eval(0, 0.5, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(k.Eval(0, 2.0, 1.0), 1.5);
  EXPECT_DOUBLE_EQ(k.Eval(0, 5.0, 1.0), 3.0);
  EXPECT_DOUBLE_EQ(k.Slope0(0, 1.0), 1.0);
  EXPECT_THROW(ConcaveRho::Knots({{1.0, 1.0}, {2.0, 3.0}}), ValidationError);
  EXPECT_THROW(ConcaveRho::Knots({{1.0, 1.0}, {2.0, 0.5}}), ValidationError);
  EXPECT_THROW(ConcaveRho::Knots({{0.0, 1.0}, {2.0, 3.0}}), ValidationError);
}

TEST(ConcaveRhoTest, PerDatumCountChecked) {
  const ConcaveRho r = ConcaveRho::PerDatumKnots(
      {{{1.0, 1.0}}, {{1.0, 0.5}}, {{2.0, 1.0}}});
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(2, 2);
  EXPECT_THROW(GeneralizedPca(DataSet(u), r), ValidationError);
}

TEST(GeneralizedPcaTest, IdentityReducesToPca) {
  Rng rng(5);
  const DataSet data(Gaussian(rng, 4, 25));
  const Pca pca(data);
  const GeneralizedPca gpca(data, ConcaveRho::Identity());
  for (int trial = 0; trial < 10; ++trial) {
    const Subspace x = Subspace::Span(Gaussian(rng, 4, 1 + trial % 3));
    EXPECT_NEAR(gpca.Value(x), pca.Value(x), 1e-12);
  }
  EXPECT_EQ(gpca.Value(Subspace::Bottom(4)), 0.0);
}

TEST(GeneralizedPcaTest, CappedLinearDirectEvaluation) {
  Rng rng(6);
  const Eigen::MatrixXd u = Gaussian(rng, 3, 40);
  const GeneralizedPca f(DataSet(u), ConcaveRho::CappedLinear(0.01, 0.1));
  const Subspace x = Subspace::Span(Gaussian(rng, 3, 2));
  double direct = 0.0;
  for (int i = 0; i < u.cols(); ++i) {
    const double t = x.ProjectedNormSq(u.col(i));
    const double cap = 0.01 * u.col(i).squaredNorm();
    direct += t <= cap ? t : 0.1 * (t - cap) + cap;
  }
  EXPECT_NEAR(f.Value(x), direct, 1e-12);
  EXPECT_DOUBLE_EQ(f.Slope0(), 1.0);
}

TEST(GeneralizedPcaTest, Monotone) {
  Rng rng(7);
  const GeneralizedPca f(DataSet(Gaussian(rng, 3, 20)), ConcaveRho::Log1p());
  Subspace x = Subspace::Bottom(3);
  double prev = 0.0;
  for (int k = 0; k < 3; ++k) {
    x = Join(x, Direction::FromVector(Gaussian(rng, 3, 1)));
    EXPECT_GE(f.Value(x), prev);
    prev = f.Value(x);
  }
}

TEST(QuantumCutTest, AxisVectorsGiveClassicalCut) {
  Rng rng(8);
  const int n = 5;
  const WeightedDigraph g =
      RandomGraph(rng, Eigen::MatrixXd::Identity(n, n), 0.5);
  const QuantumCut f(g);
  const SetLattice l(n);
  const LatticeFunction cut = CutFunction(l, g);
  for (const ElementId s : l.Elements()) {
    std::vector<int> axes;
    for (int i = 0; i < n; ++i) {
      if ((l.Mask(s) >> i) & 1u) axes.push_back(i);
    }
    EXPECT_NEAR(f.Value(Subspace::Axes(n, axes)), cut(s), 1e-12);
  }
}

TEST(QuantumCutTest, TermByTermWithComplement) {
  Rng rng(9);
  const Eigen::MatrixXd v = Gaussian(rng, 3, 4);
  const WeightedDigraph g = RandomGraph(rng, v, 0.7);
  const QuantumCut f(g);
  EXPECT_EQ(f.Value(Subspace::Bottom(3)), 0.0);
  EXPECT_NEAR(f.Value(Subspace::Top(3)), 0.0, 1e-12);
  for (int trial = 0; trial < 10; ++trial) {
    const Subspace x = Subspace::Span(Gaussian(rng, 3, 1 + trial % 2));
    const Subspace xc = OrthoComplement(x);
    double direct = 0.0;
    for (const Edge& e : g.edges()) {
      direct += e.weight * x.Project(v.col(e.from)).squaredNorm() *
                xc.Project(v.col(e.to)).squaredNorm();
    }
    EXPECT_NEAR(f.Value(x), direct, 1e-12);
    EXPECT_GE(f.Value(x), 0.0);
  }
}

TEST(QuantumCutTest, NotMonotone) {
  Rng rng(10);
  const QuantumCut f(RandomGraph(rng, Gaussian(rng, 3, 5), 0.6));
  bool witness = false;
  for (int trial = 0; trial < 50 && !witness; ++trial) {
    const Subspace x = Subspace::Span(Gaussian(rng, 3, 1));
    const Subspace y = Join(x, Direction::FromVector(Gaussian(rng, 3, 1)));
    witness = f.Value(x) > f.Value(y);
  }
  EXPECT_TRUE(witness);
}

TEST(EvaluatorTest, FastPathsMatchExplicitOperations) {
  Rng rng(11);
  const GeneralizedPca f(DataSet(Gaussian(rng, 4, 10)),
                         ConcaveRho::CappedLinear(0.3, 0.2));
  const QuantumCut q(RandomGraph(rng, Gaussian(rng, 4, 5), 0.5));
  for (const SubspaceObjective* obj :
       std::vector<const SubspaceObjective*>{&f, &q}) {
    const Subspace x = Subspace::Span(Gaussian(rng, 4, 2));
    const Direction r = ResidualDirection(
        Direction::FromVector(Gaussian(rng, 4, 1)), x);
    EXPECT_NEAR(obj->JoinEvaluator(x)(r.vector()), obj->Value(Join(x, r)),
                1e-12);
    const Direction w =
        Direction::FromVector(x.basis() * Gaussian(rng, 2, 1));
    EXPECT_NEAR(obj->DescendEvaluator(x)(w.vector()),
                obj->Value(Codim1Descend(x, w)), 1e-12);
  }
}

TEST(LatticeFunctionTest, TabulateOnDictionary) {
  Rng rng(12);
  const Eigen::MatrixXd u = Gaussian(rng, 3, 10);
  const Pca f{DataSet(u)};
  auto l = Enumerate(Dictionary(Eigen::MatrixXd::Identity(3, 3)));
  const LatticeFunction t = Tabulate(f, *l);
  for (const ElementId x : l->Elements()) {
    EXPECT_NEAR(t(x), f.Value(l->SubspaceOf(x)), 1e-12);
  }
  // Closure invariance of marginals holds exactly.
  for (const ElementId x : l->Elements()) {
    for (const Atom& a : l->Admissible(x).atoms) {
      for (const Atom& b : l->Closure(a, x)) {
        EXPECT_EQ(Marginal(t, x, a), Marginal(t, x, b));
      }
    }
  }
  EXPECT_THROW(Marginal(t, l->Top(), l->AtomOf(0)), UsageError);
}

TEST(ModularCostTest, HeightCost) {
  auto l = Enumerate(Dictionary::Normalized(
      (Eigen::MatrixXd(2, 3) << 1, 1, 0, 0, 0.1, 1).finished()));
  const ModularCost c = ModularCost::Height(*l);
  for (const ElementId x : l->Elements()) {
    EXPECT_EQ(c(x), l->SubspaceOf(x).dim());
  }
  EXPECT_TRUE(CheckOrderConsistency(c).consistent);
}

TEST(ModularCostTest, SetLatticeWeights) {
  const SetLattice l(4);
  const std::vector<double> w{0.5, 1.5, 2.0, 0.25};
  const ModularCost c = ModularCost::AtomWeights(l, w);
  for (const ElementId x : l.Elements()) {
    double total = 0.0;
    for (int i = 0; i < 4; ++i) {
      if ((l.Mask(x) >> i) & 1u) total += w[i];
    }
    EXPECT_DOUBLE_EQ(c(x), total);
  }
  EXPECT_TRUE(CheckOrderConsistency(c).consistent);
}

TEST(ModularCostTest, RandomModularCostOnDictionary) {
  // Orthonormal dictionaries give Boolean lattices where any atom weights
  // are modular; path independence along composition series follows.
  Rng rng(13);
  auto l = Enumerate(Dictionary(Eigen::MatrixXd::Identity(4, 4)));
  std::vector<double> w;
  for (int i = 0; i < 4; ++i) w.push_back(rng.Uniform());
  const ModularCost c = ModularCost::AtomWeights(*l, w, 0.3);
  EXPECT_TRUE(IsModularFunction(*l, c.values()));
  for (const ElementId x : l->Elements()) {
    // Every admissible step adds the same amount, wherever it is taken.
    for (const Atom& a : l->Admissible(x).atoms) {
      EXPECT_NEAR(c.Increment(x, a), c.Increment(l->Bottom(), a), 1e-12);
    }
  }
}

TEST(ModularCostTest, NonModularTableRejected) {
  auto l = Enumerate(Dictionary::Normalized(
      (Eigen::MatrixXd(2, 3) << 1, 1, 0, 0, 0.1, 1).finished()));
  // Distinct line weights cannot be modular on the diamond.
  EXPECT_THROW(ModularCost::AtomWeights(*l, {1.0, 2.0, 3.0}),
               ValidationError);
  EXPECT_THROW(ModularCost::Height(*l, -1.0), ValidationError);
}

TEST(ModularCostTest, DecreasingChainWeightsViolateOrderConsistency) {
  auto chain = TableLattice::Chain(3);
  const ModularCost c = ModularCost::FromTable(*chain, {0.0, 2.0, 3.0, 3.5});
  const OrderConsistency r = CheckOrderConsistency(c);
  ASSERT_FALSE(r.consistent);
  EXPECT_GT(r.lhs, r.rhs);
  EXPECT_TRUE(chain->Leq(chain->Element(r.a), chain->Element(r.b)));
  EXPECT_DOUBLE_EQ(
      c.Increment(chain->Element(r.x), chain->AsAtom(chain->Element(r.a))),
      r.lhs);
  EXPECT_DOUBLE_EQ(
      c.Increment(chain->Element(r.y), chain->AsAtom(chain->Element(r.b))),
      r.rhs);
}

TEST(CoverageTest, WeightedCoverage) {
  const SetLattice l(3);
  const LatticeFunction f =
      WeightedCoverage(l, {{0, 1}, {1, 2}, {3}}, {1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(f(l.FromMask(0b011)), 6.0);
  EXPECT_DOUBLE_EQ(f(l.FromMask(0b111)), 10.0);
  EXPECT_DOUBLE_EQ(f(l.Bottom()), 0.0);
}

}  // namespace
}  // namespace dirsub
