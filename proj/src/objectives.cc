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

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "dirsub/errors.h"

namespace dirsub {
namespace {

constexpr double kSlopeStep = 1e-8;
constexpr int kRhoSamples = 100;

// Neumaier-compensated running sum; deterministic left-to-right order.
class Accumulator {
 public:
  void Add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double Total() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

ConcaveRho::KnotList CheckedKnots(ConcaveRho::KnotList k) {
  if (k.empty() || k.front().first != 0.0) k.insert(k.begin(), {0.0, 0.0});
  if (k.front().second != 0.0) {
    throw ValidationError("rho must vanish at zero");
  }
  if (k.size() < 2) throw ValidationError("rho needs a knot past zero");
  double prev_slope = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < k.size(); ++i) {
    const double dt = k[i].first - k[i - 1].first;
    if (!(dt > 0.0)) {
      throw ValidationError("rho knots must be strictly increasing in t");
    }
    const double slope = (k[i].second - k[i - 1].second) / dt;
    if (slope < -1e-12) throw ValidationError("rho must be non-decreasing");
    if (slope > prev_slope + 1e-12) {
      throw ValidationError("rho must be concave");
    }
    prev_slope = slope;
  }
  return k;
}

}  // namespace

// ---------------------------------------------------------------------------

DataSet::DataSet(Eigen::MatrixXd vectors)
    : DataSet(vectors, Eigen::VectorXd::Ones(vectors.cols())) {}

DataSet::DataSet(Eigen::MatrixXd vectors, Eigen::VectorXd weights)
    : vectors_(std::move(vectors)), weights_(std::move(weights)) {
  if (weights_.size() != vectors_.cols()) {
    throw UsageError("one weight per data vector is required");
  }
  if (weights_.size() > 0 && weights_.minCoeff() < 0.0) {
    throw ValidationError("data weights must be nonnegative");
  }
  if (!vectors_.allFinite()) throw ValidationError("data must be finite");
  norms_sq_ = vectors_.colwise().squaredNorm().transpose();
}

Eigen::MatrixXd DataSet::SecondMoment() const {
  return vectors_ * weights_.asDiagonal() * vectors_.transpose();
}

// ---------------------------------------------------------------------------

ConcaveRho ConcaveRho::Identity() { return ConcaveRho(); }

ConcaveRho ConcaveRho::Log1p() {
  ConcaveRho r;
  r.kind_ = Kind::kLog1p;
  return r;
}

ConcaveRho ConcaveRho::CappedLinear(double fraction, double slope) {
  if (!(fraction >= 0.0) || !(slope >= 0.0) || slope > 1.0) {
    throw ValidationError(
        "capped-linear rho needs fraction >= 0 and slope in [0, 1]");
  }
  ConcaveRho r;
  r.kind_ = Kind::kCappedLinear;
  r.fraction_ = fraction;
  r.slope_ = slope;
  return r;
}

ConcaveRho ConcaveRho::Knots(KnotList knots) {
  ConcaveRho r;
  r.kind_ = Kind::kKnots;
  r.knots_.push_back(CheckedKnots(std::move(knots)));
  return r;
}

ConcaveRho ConcaveRho::PerDatumKnots(std::vector<KnotList> knots) {
  if (knots.empty()) throw ValidationError("no knot lists given");
  ConcaveRho r;
  r.kind_ = Kind::kKnots;
  for (auto& k : knots) r.knots_.push_back(CheckedKnots(std::move(k)));
  return r;
}

ConcaveRho ConcaveRho::Builtin(const std::string& name) {
  if (name == "identity") return Identity();
  if (name == "log1p") return Log1p();
  if (name == "capped-linear") return CappedLinear();
  throw ValidationError("unknown rho builtin: " + name);
}

std::string ConcaveRho::name() const {
  switch (kind_) {
    case Kind::kIdentity:
      return "identity";
    case Kind::kLog1p:
      return "log1p";
    case Kind::kCappedLinear:
      return "capped-linear";
    case Kind::kKnots:
      return "knots";
  }
  return "";
}

double ConcaveRho::EvalKnots(const KnotList& k, double t) {
  std::size_t i = 1;
  while (i + 1 < k.size() && t > k[i].first) ++i;
  const auto& [t0, v0] = k[i - 1];
  const auto& [t1, v1] = k[i];
  return v0 + (v1 - v0) / (t1 - t0) * (t - t0);
}

double ConcaveRho::Eval(int i, double t, double norm_sq) const {
  switch (kind_) {
    case Kind::kIdentity:
      return t;
    case Kind::kLog1p:
      return std::log1p(t);
    case Kind::kCappedLinear: {
      const double cap = fraction_ * norm_sq;
      return t <= cap ? t : slope_ * (t - cap) + cap;
    }
    case Kind::kKnots:
      return EvalKnots(knots_.size() == 1 ? knots_[0] : knots_.at(i), t);
  }
  return 0.0;
}

double ConcaveRho::Slope0(int i, double norm_sq) const {
  switch (kind_) {
    case Kind::kIdentity:
      return 1.0;
    case Kind::kCappedLinear:
      return fraction_ * norm_sq > 0.0 ? 1.0 : slope_;
    case Kind::kKnots: {
      const KnotList& k = knots_.size() == 1 ? knots_[0] : knots_.at(i);
      return (k[1].second - k[0].second) / (k[1].first - k[0].first);
    }
    case Kind::kLog1p:
      break;
  }
  return (Eval(i, kSlopeStep, norm_sq) - Eval(i, 0.0, norm_sq)) / kSlopeStep;
}

void ConcaveRho::Validate(const DataSet& data) const {
  if (kind_ == Kind::kKnots && knots_.size() > 1 &&
      static_cast<int>(knots_.size()) != data.size()) {
    throw ValidationError("per-datum rho count does not match the data");
  }
  for (int i = 0; i < data.size(); ++i) {
    const double top = data.norms_sq()(i);
    if (std::abs(Eval(i, 0.0, top)) > 1e-12) {
      throw ValidationError("rho_" + std::to_string(i) + "(0) != 0");
    }
    if (top <= 0.0) continue;
    const double tol = 1e-9 * std::max(1.0, std::abs(Eval(i, top, top)));
    double prev_value = 0.0;
    double prev_inc = std::numeric_limits<double>::infinity();
    for (int s = 1; s < kRhoSamples; ++s) {
      const double t = top * s / (kRhoSamples - 1);
      const double v = Eval(i, t, top);
      const double inc = v - prev_value;
      if (inc < -tol) {
        throw ValidationError("rho_" + std::to_string(i) + " decreases");
      }
      if (inc > prev_inc + tol) {
        throw ValidationError("rho_" + std::to_string(i) +
                              " is not concave");
      }
      prev_value = v;
      prev_inc = inc;
    }
  }
}

// ---------------------------------------------------------------------------

WeightedDigraph::WeightedDigraph(Eigen::MatrixXd vertices,
                                 std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.from < 0 || e.to < 0 || e.from >= num_vertices() ||
        e.to >= num_vertices()) {
      throw ValidationError("edge references an unknown vertex");
    }
    if (!(e.weight >= 0.0)) {
      throw ValidationError("edge weights must be nonnegative");
    }
  }
}

// ---------------------------------------------------------------------------

std::function<double(const Eigen::VectorXd&)> SubspaceObjective::JoinEvaluator(
    const Subspace& x) const {
  return [this, x](const Eigen::VectorXd& r) {
    return Value(Join(x, Direction::FromVector(r)));
  };
}

std::function<double(const Eigen::VectorXd&)>
SubspaceObjective::DescendEvaluator(const Subspace& b) const {
  return [this, b](const Eigen::VectorXd& w) {
    return Value(Codim1Descend(b, Direction::FromVector(w)));
  };
}

ProjectionObjective::ProjectionObjective(Eigen::MatrixXd vectors)
    : vectors_(std::move(vectors)) {}

Eigen::VectorXd ProjectionObjective::Projections(const Subspace& x) const {
  if (x.ambient_dim() != ambient_dim()) {
    throw UsageError("subspace and objective ambient dimensions differ");
  }
  if (x.dim() == 0) return Eigen::VectorXd::Zero(vectors_.cols());
  return (x.basis().transpose() * vectors_).colwise().squaredNorm().transpose();
}

double ProjectionObjective::Value(const Subspace& x) const {
  return FromProjections(Projections(x));
}

Eigen::VectorXd ProjectionObjective::FromProjectionsBatch(
    const Eigen::MatrixXd& p) const {
  Eigen::VectorXd out(p.cols());
  for (Eigen::Index j = 0; j < p.cols(); ++j) out(j) = FromProjections(p.col(j));
  return out;
}

std::function<double(const Eigen::VectorXd&)> ProjectionObjective::JoinEvaluator(
    const Subspace& x) const {
  Eigen::VectorXd p = Projections(x);
  return [this, p = std::move(p)](const Eigen::VectorXd& r) {
    const Eigen::VectorXd c = vectors_.transpose() * r;
    return FromProjections(p + c.cwiseAbs2());
  };
}

std::function<double(const Eigen::VectorXd&)>
ProjectionObjective::DescendEvaluator(const Subspace& b) const {
  Eigen::VectorXd p = Projections(b);
  return [this, p = std::move(p)](const Eigen::VectorXd& w) {
    const Eigen::VectorXd c = vectors_.transpose() * w;
    return FromProjections((p - c.cwiseAbs2()).cwiseMax(0.0));
  };
}

Pca::Pca(DataSet data)
    : ProjectionObjective(data.vectors()),
      data_(std::move(data)),
      second_moment_(data_.SecondMoment()) {}

double Pca::FromProjections(const Eigen::VectorXd& p) const {
  Accumulator acc;
  for (int i = 0; i < p.size(); ++i) acc.Add(data_.weights()(i) * p(i));
  return acc.Total();
}

Eigen::VectorXd Pca::FromProjectionsBatch(const Eigen::MatrixXd& p) const {
  return p.transpose() * data_.weights();
}

std::optional<Eigen::MatrixXd> Pca::QuadraticForm() const {
  return second_moment_;
}

GeneralizedPca::GeneralizedPca(DataSet data, ConcaveRho rho)
    : ProjectionObjective(data.vectors()),
      data_(std::move(data)),
      rho_(std::move(rho)) {
  rho_.Validate(data_);
}

double GeneralizedPca::FromProjections(const Eigen::VectorXd& p) const {
  Accumulator acc;
  for (int i = 0; i < p.size(); ++i) {
    acc.Add(data_.weights()(i) * rho_.Eval(i, p(i), data_.norms_sq()(i)));
  }
  return acc.Total();
}

Eigen::VectorXd GeneralizedPca::FromProjectionsBatch(
    const Eigen::MatrixXd& p) const {
  const Eigen::VectorXd& w = data_.weights();
  switch (rho_.kind()) {
    case ConcaveRho::Kind::kIdentity:
      return p.transpose() * w;
    case ConcaveRho::Kind::kLog1p:
      return p.array().log1p().matrix().transpose() * w;
    case ConcaveRho::Kind::kCappedLinear: {
      const Eigen::ArrayXd cap = rho_.fraction() * data_.norms_sq().array();
      // t - (1 - slope) * max(t - cap, 0).
      const Eigen::ArrayXXd excess =
          (p.array().colwise() - cap).max(0.0);
      const Eigen::MatrixXd r = p.array() - (1.0 - rho_.slope()) * excess;
      return r.transpose() * w;
    }
    case ConcaveRho::Kind::kKnots:
      break;
  }
  return ProjectionObjective::FromProjectionsBatch(p);
}

std::optional<Eigen::MatrixXd> GeneralizedPca::QuadraticForm() const {
  if (rho_.kind() != ConcaveRho::Kind::kIdentity) return std::nullopt;
  return data_.SecondMoment();
}

double GeneralizedPca::Slope0() const {
  double s = 0.0;
  for (int i = 0; i < data_.size(); ++i) {
    s = std::max(s, rho_.Slope0(i, data_.norms_sq()(i)));
  }
  return s;
}

QuantumCut::QuantumCut(WeightedDigraph graph)
    : ProjectionObjective(graph.vertices()),
      graph_(std::move(graph)),
      norms_sq_(graph_.vertices().colwise().squaredNorm().transpose()) {}

double QuantumCut::FromProjections(const Eigen::VectorXd& p) const {
  Accumulator acc;
  for (const Edge& e : graph_.edges()) {
    // ||Pi_{X^perp} u||^2 = ||u||^2 - ||Pi_X u||^2.
    const double outside = std::max(0.0, norms_sq_(e.to) - p(e.to));
    acc.Add(e.weight * p(e.from) * outside);
  }
  return acc.Total();
}

double Marginal(const SubspaceObjective& f, const Subspace& x,
                const Direction& a) {
  if (!IsAdmissible(a, x)) {
    throw UsageError("marginal requires a direction outside the subspace");
  }
  return f.Value(Join(x, a)) - f.Value(x);
}

// ---------------------------------------------------------------------------

LatticeFunction::LatticeFunction(const FiniteLattice& lattice,
                                 std::vector<double> values)
    : lattice_(&lattice), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != lattice.size()) {
    throw UsageError("one value per lattice element is required");
  }
}

LatticeFunction LatticeFunction::Tabulate(
    const FiniteLattice& lattice, const std::function<double(ElementId)>& f) {
  std::vector<double> v;
  v.reserve(lattice.size());
  for (const ElementId x : lattice.Elements()) v.push_back(f(x));
  return LatticeFunction(lattice, std::move(v));
}

double LatticeFunction::operator()(ElementId x) const {
  if (x.lattice_tag() != lattice_->tag()) {
    throw UsageError("element handle does not belong to this lattice");
  }
  return values_[x.index()];
}

LatticeFunction Tabulate(const SubspaceObjective& f,
                         const DictionaryLattice& lattice) {
  if (f.ambient_dim() != lattice.dictionary().ambient_dim()) {
    throw UsageError("objective and dictionary ambient dimensions differ");
  }
  return LatticeFunction::Tabulate(lattice, [&](ElementId x) {
    return f.Value(lattice.SubspaceOf(x));
  });
}

LatticeFunction CutFunction(const SetLattice& lattice,
                            const WeightedDigraph& graph) {
  if (graph.num_vertices() != lattice.ground_set_size()) {
    throw UsageError("graph and ground set sizes differ");
  }
  return LatticeFunction::Tabulate(lattice, [&](ElementId x) {
    const std::uint32_t s = lattice.Mask(x);
    double total = 0.0;
    for (const Edge& e : graph.edges()) {
      if (((s >> e.from) & 1u) && !((s >> e.to) & 1u)) total += e.weight;
    }
    return total;
  });
}

LatticeFunction WeightedCoverage(const SetLattice& lattice,
                                 const std::vector<std::vector<int>>& cover,
                                 const std::vector<double>& item_weights) {
  if (static_cast<int>(cover.size()) != lattice.ground_set_size()) {
    throw UsageError("one cover list per ground element is required");
  }
  for (double w : item_weights) {
    if (!(w >= 0.0)) throw ValidationError("item weights must be >= 0");
  }
  return LatticeFunction::Tabulate(lattice, [&](ElementId x) {
    const std::uint32_t s = lattice.Mask(x);
    std::vector<char> hit(item_weights.size(), 0);
    for (int i = 0; i < lattice.ground_set_size(); ++i) {
      if (!((s >> i) & 1u)) continue;
      for (int item : cover[i]) hit.at(item) = 1;
    }
    double total = 0.0;
    for (std::size_t j = 0; j < hit.size(); ++j) {
      if (hit[j]) total += item_weights[j];
    }
    return total;
  });
}

double Marginal(const LatticeFunction& f, ElementId x, Atom a) {
  if (!f.lattice().IsAdmissible(a, x)) {
    throw UsageError("marginal requires an admissible atom");
  }
  return f(f.lattice().Join(x, a)) - f(x);
}

// ---------------------------------------------------------------------------

bool IsModularFunction(const FiniteLattice& lattice,
                       const std::vector<double>& values, double tol) {
  for (int x = 0; x < lattice.size(); ++x) {
    for (int y = x + 1; y < lattice.size(); ++y) {
      const ElementId ex = lattice.Element(x);
      const ElementId ey = lattice.Element(y);
      const double lhs = values[lattice.Meet(ex, ey).index()] +
                         values[lattice.Join(ex, ey).index()];
      if (std::abs(lhs - values[x] - values[y]) >
          tol * std::max(1.0, std::abs(lhs))) {
        return false;
      }
    }
  }
  return true;
}

ModularCost ModularCost::FromTable(const FiniteLattice& lattice,
                                   std::vector<double> values) {
  if (static_cast<int>(values.size()) != lattice.size()) {
    throw UsageError("one cost per lattice element is required");
  }
  if (!lattice.is_lattice()) throw UsageError("order is not a lattice");
  for (double v : values) {
    if (!(v >= 0.0)) throw ValidationError("costs must be nonnegative");
  }
  if (!IsModularFunction(lattice, values)) {
    throw ValidationError("cost is not modular on this lattice");
  }
  return ModularCost(lattice, std::move(values));
}

ModularCost ModularCost::Height(const FiniteLattice& lattice, double scale,
                                double base) {
  std::vector<double> v;
  for (const ElementId x : lattice.Elements()) {
    v.push_back(base + scale * lattice.Height(x));
  }
  return FromTable(lattice, std::move(v));
}

ModularCost ModularCost::AtomWeights(const FiniteLattice& lattice,
                                     const std::vector<double>& weights,
                                     double base) {
  const auto& atoms = lattice.JoinIrreducibles();
  if (weights.size() != atoms.size()) {
    throw UsageError("one weight per join-irreducible is required");
  }
  std::vector<double> v;
  for (const ElementId x : lattice.Elements()) {
    double total = base;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (lattice.Leq(atoms[i].element(), x)) total += weights[i];
    }
    v.push_back(total);
  }
  return FromTable(lattice, std::move(v));
}

double ModularCost::operator()(ElementId x) const {
  if (x.lattice_tag() != lattice_->tag()) {
    throw UsageError("element handle does not belong to this lattice");
  }
  return values_[x.index()];
}

double ModularCost::Increment(ElementId x, Atom a) const {
  return (*this)(lattice_->Join(x, a)) - (*this)(x);
}

OrderConsistency CheckOrderConsistency(const ModularCost& c, double tol) {
  const FiniteLattice& l = c.lattice();
  const auto& atoms = l.JoinIrreducibles();
  const int m = static_cast<int>(atoms.size());
  // Largest and smallest increment of each atom over the elements it is
  // admissible to; the condition for a <= b is max(a) <= min(b).
  std::vector<double> hi(m, -std::numeric_limits<double>::infinity());
  std::vector<double> lo(m, std::numeric_limits<double>::infinity());
  std::vector<int> hi_at(m, -1);
  std::vector<int> lo_at(m, -1);
  for (const ElementId x : l.Elements()) {
    for (int i = 0; i < m; ++i) {
      if (!l.IsAdmissible(atoms[i], x)) continue;
      const double inc = c.Increment(x, atoms[i]);
      if (inc > hi[i]) {
        hi[i] = inc;
        hi_at[i] = x.index();
      }
      if (inc < lo[i]) {
        lo[i] = inc;
        lo_at[i] = x.index();
      }
    }
  }
  OrderConsistency out;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (hi_at[i] < 0 || lo_at[j] < 0) continue;
      if (!l.Leq(atoms[i].element(), atoms[j].element())) continue;
      if (hi[i] > lo[j] + tol) {
        out.consistent = false;
        out.x = hi_at[i];
        out.a = atoms[i].index();
        out.y = lo_at[j];
        out.b = atoms[j].index();
        out.lhs = hi[i];
        out.rhs = lo[j];
        return out;
      }
    }
  }
  return out;
}

}  // namespace dirsub
