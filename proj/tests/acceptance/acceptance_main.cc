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

// Acceptance suite: one PASS/FAIL line per criterion. Exits 0 once every
// criterion has been evaluated; with --strict, exits 1 if any failed.
// Lines are also written to acceptance_results.txt in the working
// directory.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dirsub/diagnostics.h"
#include "dirsub/dictionary.h"
#include "dirsub/experiments.h"
#include "dirsub/lattice.h"
#include "dirsub/objectives.h"
#include "dirsub/oracle.h"
#include "dirsub/rng.h"
#include "dirsub/solvers.h"

namespace dirsub {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<std::string> g_lines;
int g_failures = 0;

void Report(int id, const std::string& name, const Outcome& o) {
  std::ostringstream os;
  os << (o.pass ? "PASS" : "FAIL") << " " << id << " " << name << ": "
     << o.detail;
  std::cout << os.str() << std::endl;
  g_lines.push_back(os.str());
  if (!o.pass) ++g_failures;
}

template <typename F>
void Run(int id, const std::string& name, F body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  Report(id, name, o);
}

Eigen::MatrixXd Gaussian(Rng& rng, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = rng.Normal();
  }
  return m;
}

int UniformIn(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.UniformInt(hi - lo + 1));
}

std::string Fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// ---- 1 ---------------------------------------------------------------------

Outcome GreedyPcaExactness() {
  double worst_rel = 0.0;
  double worst_time = 0.0;
  for (int seed = 0; seed < 20; ++seed) {
    Rng rng(1000 + seed);
    const DataSet data(Gaussian(rng, 6, 50));
    const auto start = Clock::now();
    const Pca f(data);
    InnerArgmaxPca eig;
    const SolveReport r = GreedyHeight(f, 3, eig);
    worst_time = std::max(worst_time, Seconds(start));
    // Independent: eigenvalues of the scatter matrix built by hand.
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(6, 6);
    for (int i = 0; i < 50; ++i) {
      s += data.vectors().col(i) * data.vectors().col(i).transpose();
    }
    const Eigen::VectorXd ev =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(s).eigenvalues();
    const double top3 = ev(5) + ev(4) + ev(3);
    worst_rel = std::max(worst_rel, std::abs(r.value - top3) / top3);
  }
  return {worst_rel <= 1e-6 && worst_time < 1.0,
          "20 seeds, max relative error " + Fmt(worst_rel) +
              ", slowest seed " + Fmt(worst_time) + " s"};
}

// ---- 2 ---------------------------------------------------------------------

Outcome AppendixExperiment() {
  const auto start = Clock::now();
  int pca_hits = 0;
  int gpca_hits = 0;
  std::string gpca_planes;
  for (int seed = 0; seed < 8; ++seed) {
    MixtureSpec spec;
    spec.seed = seed;
    StrategyOptions s;
    s.kind = StrategyOptions::Kind::kGrid;
    s.grid_width = 0.025;
    const AppendixResult r =
        RunAppendixExperiment(spec, ConcaveRho::CappedLinear(), s);
    pca_hits += r.pca.aligned && r.pca.plane == "x1-x3";
    gpca_hits += r.gpca.aligned && r.gpca.plane == "x1-x2";
    gpca_planes += (seed ? "," : "") + r.gpca.plane;
  }
  const double t = Seconds(start);
  return {pca_hits >= 7 && gpca_hits >= 7 && t < 30.0,
          "pca x1-x3 in " + std::to_string(pca_hits) +
              "/8, gpca x1-x2 in " + std::to_string(gpca_hits) +
              "/8 (gpca planes " + gpca_planes + "), " + Fmt(t) + " s"};
}

// ---- 3 ---------------------------------------------------------------------

LatticeFunction RandomProjectionObjective(Rng& rng, const DictionaryLattice& l,
                                          bool generalized) {
  const DataSet data(Gaussian(rng, l.dictionary().ambient_dim(), 20));
  if (generalized) {
    return Tabulate(GeneralizedPca(data, ConcaveRho::CappedLinear()), l);
  }
  return Tabulate(Pca(data), l);
}

Outcome HeightGreedyBound() {
  Rng rng(3);
  int violations = 0;
  double max_delta = 0.0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (int inst = 0; inst < 30; ++inst) {
    const int d = UniformIn(rng, 2, 5);
    const int m = UniformIn(rng, d, 8);
    const auto l = Enumerate(RandomDictionary(rng, d, m));
    const LatticeFunction f = RandomProjectionObjective(rng, *l, inst % 2);
    const int k = UniformIn(rng, 1, std::min(3, l->height()));
    const double delta = MeasureDownwardGap(f).measured_delta;
    max_delta = std::max(max_delta, delta);
    const SolveReport r = GreedyHeight(f, k);
    const OracleResult opt = BruteForce(f, OracleConstraint::Height(k));
    const Guarantee g = GreedyHeightGuarantee(k, l->Incrementality(), delta);
    if (!VerifyRatio(r.value, opt.value, g.ratio, g.additive)) ++violations;
    min_slack = std::min(min_slack,
                         r.value - (g.ratio * opt.value - g.additive));
  }
  return {violations == 0,
          "30 instances, " + std::to_string(violations) +
              " violations, max measured gap " + Fmt(max_delta) +
              ", min slack " + Fmt(min_slack)};
}

// ---- 4 ---------------------------------------------------------------------

Outcome KnapsackBound() {
  Rng rng(4);
  int violations = 0;
  int inconsistent = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (int inst = 0; inst < 30; ++inst) {
    std::unique_ptr<FiniteLattice> l;
    std::optional<LatticeFunction> f;
    std::optional<ModularCost> c;
    double budget = 0.0;
    if (inst % 2 == 0) {
      const int n = UniformIn(rng, 4, 8);
      auto s = std::make_unique<SetLattice>(n);
      std::vector<std::vector<int>> cover(n);
      for (auto& items : cover) {
        for (int item = 0; item < 10; ++item) {
          if (rng.Uniform() < 0.3) items.push_back(item);
        }
      }
      std::vector<double> w(10);
      for (double& x : w) x = rng.Uniform();
      f = WeightedCoverage(*s, cover, w);
      std::vector<double> cw(n);
      double total = 0.0;
      for (double& x : cw) total += (x = 0.2 + rng.Uniform());
      c = ModularCost::AtomWeights(*s, cw);
      budget = 0.3 + rng.Uniform() * total / 2;
      l = std::move(s);
    } else {
      // Height costs are modular only on modular lattices: lines in the
      // plane, or a basis plus a vector inside one coordinate plane.
      const int d = UniformIn(rng, 2, 4);
      auto dl = Enumerate(
          d == 2 ? RandomDictionary(rng, 2, UniformIn(rng, 2, 6))
                 : NearCollinearDictionary(rng, d, 0.05 + rng.Uniform(), 1));
      if (!dl->IsModular()) {
        throw std::logic_error("generated dictionary lattice is not modular");
      }
      f = RandomProjectionObjective(rng, *dl, inst % 4 == 1);
      const double scale = 0.5 + rng.Uniform();
      c = ModularCost::Height(*dl, scale);
      budget = scale * (1 + rng.Uniform() * (d - 1));
      l = std::move(dl);
    }
    if (!CheckOrderConsistency(*c).consistent) ++inconsistent;
    const double delta = MeasureDownwardGap(*f).measured_delta;
    const SolveReport r = GreedyKnapsack(*f, *c, budget);
    const OracleResult opt = BruteForce(*f, OracleConstraint::Cost(*c, budget));
    const int h = l->Height(l->Element(opt.optimum_index));
    const Guarantee g = KnapsackGuarantee(h, delta);
    const bool ok = r.cost <= budget + 1e-12 &&
                    VerifyRatio(r.value, opt.value, g.ratio, g.additive);
    if (!ok) ++violations;
    min_slack = std::min(min_slack,
                         r.value - (g.ratio * opt.value - g.additive));
  }
  return {violations == 0 && inconsistent == 0,
          "30 instances (15 set, 15 dictionary), " +
              std::to_string(violations) + " violations, " +
              std::to_string(inconsistent) +
              " cost order-consistency failures, min slack " + Fmt(min_slack)};
}

// ---- 5 and 10 --------------------------------------------------------------

struct AlphaBeta {
  int steps = 0;
  double min_sum = std::numeric_limits<double>::infinity();
};

void Track(AlphaBeta& ab, const SolveReport& r) {
  for (const auto& rec : r.trace) {
    ++ab.steps;
    ab.min_sum = std::min(ab.min_sum, rec.alpha + rec.beta);
  }
}

AlphaBeta g_finite_ab;

Outcome DoubleGreedyCuts() {
  Rng rng(5);
  int ratio_fail = 0;
  int order_fail = 0;
  int length_fail = 0;
  for (int inst = 0; inst < 30; ++inst) {
    const int n = UniformIn(rng, 3, 10);
    const SetLattice l(n);
    const LatticeFunction f =
        CutFunction(l, RandomDigraph(rng, 1, n, UniformIn(rng, n, 3 * n)));
    const SolveReport r = DoubleGreedy(f);
    const OracleResult opt = BruteForce(f, OracleConstraint::None());
    if (!VerifyRatio(r.value, opt.value, 1.0 / 3.0, 0.0, 1e-12)) ++ratio_fail;
    for (const auto& rec : r.trace) order_fail += !rec.lower_leq_upper;
    if (static_cast<int>(r.trace.size()) > l.height()) ++length_fail;
    Track(g_finite_ab, r);
  }
  return {ratio_fail == 0 && order_fail == 0 && length_fail == 0,
          "30 cut instances, " + std::to_string(ratio_fail) +
              " below OPT/3, " + std::to_string(order_fail) +
              " steps with A not below B, " + std::to_string(length_fail) +
              " runs longer than h(L)"};
}

Outcome AlphaPlusBeta() {
  AlphaBeta vec;
  Rng rng(10);
  for (int inst = 0; inst < 10; ++inst) {
    const QuantumCut f(RandomDigraph(rng, 3, 5, 10));
    InnerArgmaxGrid up(0.05);
    InnerArgmaxGrid down(0.05);
    const SolveReport r = DoubleGreedy(f, up, down);
    if (r.status != "ok") throw std::runtime_error(r.status);
    Track(vec, r);
  }
  constexpr double kTol = 1e-9;
  const bool ok = g_finite_ab.steps > 0 && g_finite_ab.min_sum >= -kTol &&
                  vec.min_sum >= -kTol;
  return {ok, std::to_string(g_finite_ab.steps) +
                  " finite steps, min alpha+beta " +
                  Fmt(g_finite_ab.min_sum) + "; " + std::to_string(vec.steps) +
                  " quantum-cut steps on R^3, min alpha+beta " +
                  Fmt(vec.min_sum)};
}

// ---- 6 ---------------------------------------------------------------------

Outcome GapEquivalence() {
  Rng rng(6);
  bool ok = true;
  double worst = 0.0;
  for (int n : {3, 4}) {
    const SetLattice l(n);
    const EquivalenceCheck c = CheckGapEquivalence(l, 50, rng);
    ok = ok && c.equivalent && c.closures_singleton && c.trials == 50;
    worst = std::max(worst, c.max_disagreement);
  }
  return {ok, "2^3 and 2^4, 50 functions each, max gap disagreement " +
                  Fmt(worst) + ", closures singleton"};
}

// ---- 7 ---------------------------------------------------------------------

Outcome OrthonormalGaps() {
  Rng rng(7);
  double worst = 0.0;
  int scans = 0;
  for (int d = 2; d <= 4; ++d) {
    for (int rep = 0; rep < 3; ++rep) {
      const auto l = Enumerate(NearCollinearDictionary(rng, d, 0.5, 0));
      const DataSet data(Gaussian(rng, d, 10));
      const std::vector<LatticeFunction> fs = {
          Tabulate(Pca(data), *l),
          Tabulate(GeneralizedPca(data, ConcaveRho::CappedLinear()), *l),
          Tabulate(QuantumCut(RandomDigraph(rng, d, 5, 10)), *l)};
      for (const auto& f : fs) {
        worst = std::max({worst, MeasureDownwardGap(f).measured_delta,
                          MeasureUpwardGap(f).measured_delta});
        scans += 2;
      }
    }
  }
  return {worst <= 1e-10, std::to_string(scans) +
                              " scans (pca, gpca, qcut; d = 2..4), max gap " +
                              Fmt(worst)};
}

// ---- 8 ---------------------------------------------------------------------

Outcome CoherenceGap() {
  Rng rng(8);
  int violations = 0;
  int positive = 0;
  double coherence_err = 0.0;
  double worst_ratio = 0.0;
  for (double eps : {0.01, 0.05, 0.1}) {
    // normalize(q1 + t q2) makes an angle with q1 whose sine is eps.
    const double t = eps / std::sqrt(1 - eps * eps);
    for (int inst = 0; inst < 10; ++inst) {
      const int d = 2 + inst % 3;
      const auto l = Enumerate(NearCollinearDictionary(rng, d, t, 1));
      const double mu = CoherenceLattice(*l).value;
      coherence_err = std::max(coherence_err, std::abs(mu - eps));
      const GeneralizedPca f(DataSet(Gaussian(rng, d, 10)),
                             ConcaveRho::CappedLinear());
      const double delta = MeasureDownwardGap(Tabulate(f, *l)).measured_delta;
      const double bound = CoherenceGapBound(mu, f);
      if (delta > bound + 1e-10) ++violations;
      if (delta > 0) ++positive;
      worst_ratio = std::max(worst_ratio, delta / bound);
    }
  }
  return {violations == 0 && coherence_err < 1e-9,
          "30 instances, " + std::to_string(violations) + " violations, " +
              std::to_string(positive) + " with positive gap, max gap/bound " +
              Fmt(worst_ratio) + ", max |mu - eps| " + Fmt(coherence_err)};
}

// ---- 9 ---------------------------------------------------------------------

Outcome CoherenceBound() {
  Rng rng(9);
  int eligible = 0;
  int checked = 0;
  int violations = 0;
  double best_mu = 1.0;
  for (int inst = 0; inst < 20; ++inst) {
    const Dictionary v = LowCoherenceDictionary(rng, 4, 6);
    const CoherenceBoundCheck c = CheckCoherenceBound(v);
    best_mu = std::min(best_mu, c.vector_coherence);
    if (c.vector_coherence <= 0.1) ++eligible;
    if (!c.skipped) {
      ++checked;
      violations += !c.holds;
    }
  }
  const double e = 0.01;
  Eigen::MatrixXd u(2, 3);
  u << 1, 0, 1, 0, 1, e;
  u.col(2).normalize();
  const Dictionary three(u);
  const double mu_v = CoherenceVectors(three);
  const double mu_l = CoherenceLattice(*Enumerate(three)).value;
  const double err = std::max(std::abs(mu_v - 1 / std::sqrt(1 + e * e)),
                              std::abs(mu_l - e / std::sqrt(1 + e * e)));
  const bool random_ok = eligible == 20 && checked == 20 && violations == 0;
  return {random_ok && err < 1e-9,
          "random part: " + std::to_string(eligible) +
              "/20 dictionaries reach mu(V) <= 0.1 (best " + Fmt(best_mu) +
              "; 6 unit vectors in R^4 have mu >= sqrt(0.1) = 0.316), " +
              std::to_string(checked) + " non-vacuous checks, " +
              std::to_string(violations) +
              " violations; three-vector example error " + Fmt(err)};
}

}  // namespace
}  // namespace dirsub

int main(int argc, char** argv) {
  using namespace dirsub;
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  Run(1, "greedy PCA exactness", GreedyPcaExactness);
  Run(2, "appendix mixture experiment", AppendixExperiment);
  Run(3, "height-constrained greedy guarantee", HeightGreedyBound);
  Run(4, "knapsack greedy guarantee", KnapsackBound);
  Run(5, "double greedy on cuts", DoubleGreedyCuts);
  Run(6, "gap equivalence on distributive lattices", GapEquivalence);
  Run(7, "zero gaps on orthonormal dictionary lattices", OrthonormalGaps);
  Run(8, "coherence gap bound", CoherenceGap);
  Run(9, "lattice coherence bound", CoherenceBound);
  Run(10, "double greedy alpha + beta >= 0", AlphaPlusBeta);
  std::ofstream out("acceptance_results.txt");
  for (const auto& line : g_lines) out << line << "\n";
  std::cout << (10 - g_failures) << "/10 criteria passed" << std::endl;
  return strict && g_failures > 0 ? 1 : 0;
}
