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

// Greedy (height and knapsack constrained) and double-greedy maximization
// on finite lattices and on L(R^d).
//
// On L(R^d) each step maximizes over unit vectors of a search subspace; how
// that is done is delegated to an InnerArgmax strategy.

#ifndef DIRSUB_SOLVERS_H_
#define DIRSUB_SOLVERS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dirsub/lattice.h"
#include "dirsub/objectives.h"
#include "dirsub/rng.h"
#include "dirsub/subspace.h"

namespace dirsub {

// One accepted step of a solver.
struct IterationRecord {
  int iteration = 0;
  // "add" (greedy), "ascend" or "descend" (double greedy).
  std::string action;
  // Finite lattices: chosen atom index, or -1.
  int atom = -1;
  // L(R^d): chosen unit direction (empty on finite lattices).
  Eigen::VectorXd direction;
  double marginal = 0.0;
  double cost_increment = 0.0;
  // Objective value after the step (double greedy: f(A)).
  double value = 0.0;
  int height = 0;
  // Double greedy only.
  double alpha = 0.0;
  double beta = 0.0;
  double value_upper = 0.0;  // f(B)
  int height_upper = 0;      // h(B)
  int lower_index = -1;      // A after the step (finite lattices)
  int upper_index = -1;      // B after the step (finite lattices)
  bool lower_leq_upper = true;
};

struct SolveReport {
  std::string algorithm;
  std::string strategy;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  // "ok", or a diagnostic when the run stopped on an error; the trace then
  // holds the steps completed so far.
  std::string status = "ok";
  std::vector<std::string> warnings;

  // Finite lattices: result element index and label.
  int result_index = -1;
  std::string result_label;
  // L(R^d): result subspace.
  std::optional<Subspace> result_subspace;

  double value = 0.0;
  double cost = 0.0;
  int height = 0;
  std::vector<IterationRecord> trace;

  // Knapsack: the two candidates of the final comparison.
  double greedy_value = 0.0;
  double singleton_value = 0.0;
  int singleton_atom = -1;
  std::string chosen;
};

// How one step searches the unit sphere of a subspace.
struct StrategyOptions {
  enum class Kind { kExactEigen, kGrid, kRandomRestart };
  Kind kind = Kind::kRandomRestart;
  // Grid spacing on the box [0,1] x [-1,1]^(d-1).
  double grid_width = 0.025;
  int restarts = 32;
  int ascent_iterations = 100;
  std::uint64_t seed = 0;
};

// Parses "exact-eigen", "grid", "random-restart".
StrategyOptions::Kind ParseStrategyKind(const std::string& name);
std::string StrategyName(StrategyOptions::Kind kind);

class InnerArgmax {
 public:
  enum class Mode {
    // Maximize f(X v r) over unit r in C, where C is orthogonal to X.
    kJoin,
    // Maximize f(B meet w^perp) over unit w in C, where C lies in B.
    kDescend,
  };
  struct Result {
    Eigen::VectorXd direction;
    double value = 0.0;
  };

  virtual ~InnerArgmax() = default;
  virtual std::string name() const = 0;
  // search is an orthonormal basis of C (d x m, m >= 1). Returns nullopt
  // when no candidate exists.
  virtual std::optional<Result> Maximize(const SubspaceObjective& f,
                                         const Subspace& base,
                                         const Eigen::MatrixXd& search,
                                         Mode mode) = 0;
};

// Top (kJoin) or bottom (kDescend) eigenvector of C^T M C, where
// f(X) = trace(Pi_X M). Throws UsageError for other objectives.
class InnerArgmaxPca : public InnerArgmax {
 public:
  std::string name() const override { return "exact-eigen"; }
  std::optional<Result> Maximize(const SubspaceObjective& f,
                                 const Subspace& base,
                                 const Eigen::MatrixXd& search,
                                 Mode mode) override;
};

// Projects every point of the ambient box grid onto C, normalizes, and keeps
// the best; ties go to the lowest grid index. Ambient dimension <= 4.
class InnerArgmaxGrid : public InnerArgmax {
 public:
  static constexpr int kMaxAmbientDim = 4;
  explicit InnerArgmaxGrid(double width);
  std::string name() const override { return "grid"; }
  std::optional<Result> Maximize(const SubspaceObjective& f,
                                 const Subspace& base,
                                 const Eigen::MatrixXd& search,
                                 Mode mode) override;

 private:
  double width_;
};

// Projected ascent on the sphere of C with central-difference gradients,
// from `restarts` random starts plus the search basis vectors.
class InnerArgmaxRandomRestart : public InnerArgmax {
 public:
  InnerArgmaxRandomRestart(int restarts, int iterations, std::uint64_t seed);
  std::string name() const override { return "random-restart"; }
  std::optional<Result> Maximize(const SubspaceObjective& f,
                                 const Subspace& base,
                                 const Eigen::MatrixXd& search,
                                 Mode mode) override;

 private:
  int restarts_;
  int iterations_;
  Rng rng_;
};

std::unique_ptr<InnerArgmax> MakeStrategy(const StrategyOptions& options);

// Evaluates g on each column of r (d x N), in the given mode.
Eigen::VectorXd EvaluateCandidates(const SubspaceObjective& f,
                                   const Subspace& base,
                                   const Eigen::MatrixXd& r,
                                   InnerArgmax::Mode mode);

// ---- Finite lattices -------------------------------------------------------

// Greedy under h(X) <= k; stops early when no admissible atom fits.
SolveReport GreedyHeight(const LatticeFunction& f, int k);
// Density greedy under c(X) <= budget, then the better of the greedy element
// and the best feasible atom of adm(bottom).
SolveReport GreedyKnapsack(const LatticeFunction& f, const ModularCost& c,
                           double budget);
// Double greedy from (bottom, top).
SolveReport DoubleGreedy(const LatticeFunction& f);

// ---- L(R^d) ----------------------------------------------------------------

SolveReport GreedyHeight(const SubspaceObjective& f, int k,
                         InnerArgmax& strategy);

// A modular cost on L(R^d): base + scale * dim(X).
struct HeightCost {
  double scale = 1.0;
  double base = 0.0;
  double operator()(const Subspace& x) const { return base + scale * x.dim(); }
};

SolveReport GreedyKnapsack(const SubspaceObjective& f, const HeightCost& c,
                           double budget, InnerArgmax& strategy);
// `ascent` searches a in C = B meet A^perp, `descent` searches w in C.
SolveReport DoubleGreedy(const SubspaceObjective& f, InnerArgmax& ascent,
                         InnerArgmax& descent);

}  // namespace dirsub

#endif  // DIRSUB_SOLVERS_H_
