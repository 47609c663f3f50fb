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

// Objective and cost functions on subspace lattices.
//
// Objectives on L(R^d) implement SubspaceObjective. Functions on a finite
// lattice are held as value tables (LatticeFunction); Tabulate restricts a
// subspace objective to a dictionary lattice.

#ifndef DIRSUB_OBJECTIVES_H_
#define DIRSUB_OBJECTIVES_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dirsub/dictionary.h"
#include "dirsub/lattice.h"
#include "dirsub/subspace.h"

namespace dirsub {

// Data vectors u_i as the columns of a d x n matrix, with optional
// nonnegative weights (default 1).
class DataSet {
 public:
  explicit DataSet(Eigen::MatrixXd vectors);
  DataSet(Eigen::MatrixXd vectors, Eigen::VectorXd weights);

  int ambient_dim() const { return static_cast<int>(vectors_.rows()); }
  int size() const { return static_cast<int>(vectors_.cols()); }
  const Eigen::MatrixXd& vectors() const { return vectors_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  // ||u_i||^2 for every i.
  const Eigen::VectorXd& norms_sq() const { return norms_sq_; }
  // sum_i w_i u_i u_i^T.
  Eigen::MatrixXd SecondMoment() const;

 private:
  Eigen::MatrixXd vectors_;
  Eigen::VectorXd weights_;
  Eigen::VectorXd norms_sq_;
};

// A concave non-decreasing rho_i with rho_i(0) = 0 for every datum.
//
// Builtins: identity; log1p; capped-linear, which is t up to
// fraction * ||u_i||^2 and continues with the given slope past it.
// Knots: piecewise-linear through (t_k, v_k) starting at (0, 0), extended
// past the last knot with the last slope; one list shared by all data or
// one per datum.
class ConcaveRho {
 public:
  enum class Kind { kIdentity, kLog1p, kCappedLinear, kKnots };
  using KnotList = std::vector<std::pair<double, double>>;

  static ConcaveRho Identity();
  static ConcaveRho Log1p();
  static ConcaveRho CappedLinear(double fraction = 0.01, double slope = 0.1);
  // Throws ValidationError unless the knots describe a concave,
  // non-decreasing function through the origin.
  static ConcaveRho Knots(KnotList knots);
  static ConcaveRho PerDatumKnots(std::vector<KnotList> knots);
  // "identity", "log1p", "capped-linear".
  static ConcaveRho Builtin(const std::string& name);

  Kind kind() const { return kind_; }
  std::string name() const;
  double fraction() const { return fraction_; }
  double slope() const { return slope_; }
  const std::vector<KnotList>& knots() const { return knots_; }

  // rho_i(t); norm_sq is ||u_i||^2, used by the per-datum builtins.
  double Eval(int i, double t, double norm_sq) const;
  // rho_i'(0): first-segment slope for piecewise-linear forms, a forward
  // difference with step 1e-8 otherwise.
  double Slope0(int i, double norm_sq) const;
  // Samples 100 points of each rho_i on [0, ||u_i||^2] and throws
  // ValidationError if an increment is negative or increments increase.
  void Validate(const DataSet& data) const;

 private:
  ConcaveRho() = default;
  static double EvalKnots(const KnotList& k, double t);

  Kind kind_ = Kind::kIdentity;
  double fraction_ = 0.0;
  double slope_ = 1.0;
  std::vector<KnotList> knots_;
};

// Directed graph whose vertices carry vectors u_i; edges (i, j, c >= 0).
struct Edge {
  int from;
  int to;
  double weight;
};

class WeightedDigraph {
 public:
  // Columns of `vertices` are the vertex vectors.
  WeightedDigraph(Eigen::MatrixXd vertices, std::vector<Edge> edges);

  int num_vertices() const { return static_cast<int>(vertices_.cols()); }
  int ambient_dim() const { return static_cast<int>(vertices_.rows()); }
  const Eigen::MatrixXd& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  Eigen::MatrixXd vertices_;
  std::vector<Edge> edges_;
};

// f : L(R^d) -> R.
class SubspaceObjective {
 public:
  virtual ~SubspaceObjective() = default;

  virtual std::string name() const = 0;
  virtual int ambient_dim() const = 0;
  virtual double Value(const Subspace& x) const = 0;

  // r -> f(X v r) for unit r orthogonal to X. The default joins explicitly.
  virtual std::function<double(const Eigen::VectorXd&)> JoinEvaluator(
      const Subspace& x) const;
  // w -> f(B meet w^perp) for unit w in B. The default descends explicitly.
  virtual std::function<double(const Eigen::VectorXd&)> DescendEvaluator(
      const Subspace& b) const;
  // M with f(X) = trace(Pi_X M), when f has that form.
  virtual std::optional<Eigen::MatrixXd> QuadraticForm() const {
    return std::nullopt;
  }
};

// Objectives that depend on X only through p_i = ||Pi_X u_i||^2.
class ProjectionObjective : public SubspaceObjective {
 public:
  explicit ProjectionObjective(Eigen::MatrixXd vectors);

  int ambient_dim() const override {
    return static_cast<int>(vectors_.rows());
  }
  double Value(const Subspace& x) const override;
  std::function<double(const Eigen::VectorXd&)> JoinEvaluator(
      const Subspace& x) const override;
  std::function<double(const Eigen::VectorXd&)> DescendEvaluator(
      const Subspace& b) const override;

  Eigen::VectorXd Projections(const Subspace& x) const;
  virtual double FromProjections(const Eigen::VectorXd& p) const = 0;
  // FromProjections on every column of p (n x N). Overrides may sum in a
  // different order than FromProjections.
  virtual Eigen::VectorXd FromProjectionsBatch(const Eigen::MatrixXd& p) const;
  // The vectors u_i whose projections enter f, as columns.
  const Eigen::MatrixXd& vectors() const { return vectors_; }

 private:
  Eigen::MatrixXd vectors_;
};

// f(X) = sum_i w_i ||Pi_X u_i||^2.
class Pca : public ProjectionObjective {
 public:
  explicit Pca(DataSet data);
  std::string name() const override { return "pca"; }
  double FromProjections(const Eigen::VectorXd& p) const override;
  Eigen::VectorXd FromProjectionsBatch(const Eigen::MatrixXd& p) const override;
  std::optional<Eigen::MatrixXd> QuadraticForm() const override;
  const DataSet& data() const { return data_; }

 private:
  DataSet data_;
  Eigen::MatrixXd second_moment_;
};

// f(X) = sum_i w_i rho_i(||Pi_X u_i||^2).
class GeneralizedPca : public ProjectionObjective {
 public:
  // Validates rho against the data.
  GeneralizedPca(DataSet data, ConcaveRho rho);
  std::string name() const override { return "gpca"; }
  double FromProjections(const Eigen::VectorXd& p) const override;
  Eigen::VectorXd FromProjectionsBatch(const Eigen::MatrixXd& p) const override;
  std::optional<Eigen::MatrixXd> QuadraticForm() const override;
  const DataSet& data() const { return data_; }
  const ConcaveRho& rho() const { return rho_; }
  // max_i rho_i'(0).
  double Slope0() const;

 private:
  DataSet data_;
  ConcaveRho rho_;
};

// f(X) = sum_{(i,j)} c(i,j) ||Pi_X u_i||^2 ||Pi_{X^perp} u_j||^2.
class QuantumCut : public ProjectionObjective {
 public:
  explicit QuantumCut(WeightedDigraph graph);
  std::string name() const override { return "qcut"; }
  double FromProjections(const Eigen::VectorXd& p) const override;
  const WeightedDigraph& graph() const { return graph_; }

 private:
  WeightedDigraph graph_;
  Eigen::VectorXd norms_sq_;
};

// Marginal f(X v a) - f(X); throws UsageError if a is not admissible to X.
double Marginal(const SubspaceObjective& f, const Subspace& x,
                const Direction& a);

// A function on a finite lattice, stored as one value per element.
class LatticeFunction {
 public:
  LatticeFunction(const FiniteLattice& lattice, std::vector<double> values);
  static LatticeFunction Tabulate(
      const FiniteLattice& lattice,
      const std::function<double(ElementId)>& f);

  const FiniteLattice& lattice() const { return *lattice_; }
  const std::vector<double>& values() const { return values_; }
  double operator()(ElementId x) const;
  double At(int index) const { return values_[index]; }

 private:
  const FiniteLattice* lattice_;
  std::vector<double> values_;
};

// f restricted to the elements of a dictionary lattice.
LatticeFunction Tabulate(const SubspaceObjective& f,
                         const DictionaryLattice& lattice);
// Directed cut weight of each subset: sum of c(i, j) over i in S, j not in S.
LatticeFunction CutFunction(const SetLattice& lattice,
                            const WeightedDigraph& graph);
// Weighted coverage: total weight of universe items hit by the chosen sets.
// cover[i] lists the items covered by ground element i.
LatticeFunction WeightedCoverage(const SetLattice& lattice,
                                 const std::vector<std::vector<int>>& cover,
                                 const std::vector<double>& item_weights);

// Marginal on a finite lattice; throws UsageError if a is not admissible.
double Marginal(const LatticeFunction& f, ElementId x, Atom a);

// A nonnegative modular cost on a finite lattice.
class ModularCost {
 public:
  // Throws ValidationError unless values are nonnegative and modular.
  static ModularCost FromTable(const FiniteLattice& lattice,
                               std::vector<double> values);
  // base + scale * h(X); modular when the lattice is.
  static ModularCost Height(const FiniteLattice& lattice, double scale = 1.0,
                            double base = 0.0);
  // base + sum of weights over the join-irreducibles below X, with
  // weights listed in JoinIrreducibles() order. Modular on distributive
  // lattices; validated otherwise.
  static ModularCost AtomWeights(const FiniteLattice& lattice,
                                 const std::vector<double>& weights,
                                 double base = 0.0);

  const FiniteLattice& lattice() const { return *lattice_; }
  double operator()(ElementId x) const;
  double At(int index) const { return values_[index]; }
  const std::vector<double>& values() const { return values_; }
  // c(X v a) - c(X).
  double Increment(ElementId x, Atom a) const;

 private:
  ModularCost(const FiniteLattice& lattice, std::vector<double> values)
      : lattice_(&lattice), values_(std::move(values)) {}
  const FiniteLattice* lattice_;
  std::vector<double> values_;
};

// True when g(X meet Y) + g(X join Y) = g(X) + g(Y) for all pairs.
bool IsModularFunction(const FiniteLattice& lattice,
                       const std::vector<double>& values, double tol = 1e-9);

struct OrderConsistency {
  bool consistent = true;
  // Violating (X, a, Y, b) when not consistent.
  int x = -1;
  int a = -1;
  int y = -1;
  int b = -1;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Exhaustive check of c(X v a) - c(X) <= c(Y v b) - c(Y) over all X, Y,
// a in adm(X), b in adm(Y) with a <= b.
OrderConsistency CheckOrderConsistency(const ModularCost& c,
                                       double tol = 1e-9);

}  // namespace dirsub

#endif  // DIRSUB_OBJECTIVES_H_
