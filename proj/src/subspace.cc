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

#include "dirsub/subspace.h"

#include <algorithm>
#include <string>

#include "dirsub/errors.h"

namespace dirsub {
namespace {

void CheckSameAmbient(int a, int b) {
  if (a != b) {
    throw UsageError("ambient dimension mismatch: " + std::to_string(a) +
                     " vs " + std::to_string(b));
  }
}

// Appends the part of each column of g orthogonal to the running basis.
// Two passes of classical Gram-Schmidt per column keep orthogonality at
// machine precision.
Eigen::MatrixXd Extend(const Eigen::MatrixXd& basis,
                       const Eigen::MatrixXd& g) {
  const int d = static_cast<int>(basis.rows());
  Eigen::MatrixXd out(d, std::min<int>(d, basis.cols() + g.cols()));
  int r = static_cast<int>(basis.cols());
  out.leftCols(r) = basis;
  for (int j = 0; j < g.cols() && r < d; ++j) {
    Eigen::VectorXd v = g.col(j);
    const double scale = v.norm();
    if (scale == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      v -= out.leftCols(r) * (out.leftCols(r).transpose() * v);
    }
    const double n = v.norm();
    if (n <= kOrthTol * std::max(scale, 1.0)) continue;
    out.col(r++) = v / n;
  }
  return out.leftCols(r);
}

}  // namespace

Subspace Subspace::Bottom(int ambient_dim) {
  if (ambient_dim < 0) throw UsageError("negative ambient dimension");
  return Subspace(Eigen::MatrixXd(ambient_dim, 0));
}

Subspace Subspace::Top(int ambient_dim) {
  if (ambient_dim < 0) throw UsageError("negative ambient dimension");
  return Subspace(Eigen::MatrixXd::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::Span(const Eigen::MatrixXd& generators) {
  const int d = static_cast<int>(generators.rows());
  if (generators.cols() == 0) return Bottom(d);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(generators, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  int rank = 0;
  while (rank < s.size() && s(rank) > kRankTol * smax && smax > 0.0) ++rank;
  return Subspace(svd.matrixU().leftCols(rank));
}

Subspace Subspace::FromOrthonormal(const Eigen::MatrixXd& basis) {
  if (basis.cols() > basis.rows()) {
    throw UsageError("basis has more columns than the ambient dimension");
  }
  const Eigen::MatrixXd gram = basis.transpose() * basis;
  const Eigen::MatrixXd eye =
      Eigen::MatrixXd::Identity(basis.cols(), basis.cols());
  if (basis.cols() > 0 && (gram - eye).cwiseAbs().maxCoeff() > kOrthTol) {
    throw UsageError("basis columns are not orthonormal");
  }
  return Subspace(basis);
}

Subspace Subspace::Axes(int ambient_dim, const std::vector<int>& axes) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(ambient_dim, axes.size());
  for (std::size_t j = 0; j < axes.size(); ++j) {
    if (axes[j] < 0 || axes[j] >= ambient_dim) {
      throw UsageError("axis index out of range");
    }
    b(axes[j], j) = 1.0;
  }
  return FromOrthonormal(b);
}

Eigen::VectorXd Subspace::Project(const Eigen::VectorXd& v) const {
  CheckSameAmbient(ambient_dim(), static_cast<int>(v.size()));
  return basis_ * (basis_.transpose() * v);
}

double Subspace::ProjectedNormSq(const Eigen::VectorXd& v) const {
  CheckSameAmbient(ambient_dim(), static_cast<int>(v.size()));
  return (basis_.transpose() * v).squaredNorm();
}

bool Subspace::Contains(const Eigen::VectorXd& v) const {
  const double n = v.norm();
  return (v - Project(v)).norm() <= kOrthTol * std::max(n, 1.0);
}

Direction Direction::FromVector(const Eigen::VectorXd& v) {
  const double n = v.norm();
  if (!(n > kOrthTol)) {
    throw DegenerateInputError("direction vector is numerically zero");
  }
  return Direction(v / n);
}

Direction Direction::Axis(int ambient_dim, int axis) {
  if (axis < 0 || axis >= ambient_dim) throw UsageError("axis out of range");
  return Direction(Eigen::VectorXd::Unit(ambient_dim, axis));
}

Subspace Direction::AsSubspace() const {
  return Subspace::FromOrthonormal(vector_);
}

Subspace Join(const Subspace& x, const Subspace& y) {
  CheckSameAmbient(x.ambient_dim(), y.ambient_dim());
  return Subspace::FromOrthonormal(Extend(x.basis(), y.basis()));
}

Subspace Join(const Subspace& x, const Direction& a) {
  CheckSameAmbient(x.ambient_dim(), a.ambient_dim());
  return Subspace::FromOrthonormal(Extend(x.basis(), a.vector()));
}

Subspace Meet(const Subspace& x, const Subspace& y) {
  CheckSameAmbient(x.ambient_dim(), y.ambient_dim());
  const int d = x.ambient_dim();
  if (x.dim() == 0 || y.dim() == 0) return Subspace::Bottom(d);
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd stacked(2 * d, d);
  stacked.topRows(d) = x.Projector() - eye;
  stacked.bottomRows(d) = y.Projector() - eye;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double threshold = kRankTol * std::max(s(0), 1.0);
  int rank = 0;
  while (rank < d && s(rank) > threshold) ++rank;
  return Subspace::FromOrthonormal(svd.matrixV().rightCols(d - rank));
}

Subspace OrthoComplement(const Subspace& x) {
  const int d = x.ambient_dim();
  const int r = x.dim();
  if (r == 0) return Subspace::Top(d);
  if (r == d) return Subspace::Bottom(d);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(x.basis());
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
  return Subspace::FromOrthonormal(q.rightCols(d - r));
}

bool Leq(const Subspace& x, const Subspace& y) {
  CheckSameAmbient(x.ambient_dim(), y.ambient_dim());
  if (x.dim() > y.dim()) return false;
  if (x.dim() == 0) return true;
  const Eigen::MatrixXd residual =
      x.basis() - y.basis() * (y.basis().transpose() * x.basis());
  return residual.cwiseAbs().maxCoeff() < kEqTol;
}

bool Equals(const Subspace& x, const Subspace& y) {
  CheckSameAmbient(x.ambient_dim(), y.ambient_dim());
  if (x.dim() != y.dim()) return false;
  if (x.dim() == 0) return true;
  return (x.Projector() - y.Projector()).cwiseAbs().maxCoeff() < kEqTol;
}

bool IsAdmissible(const Direction& a, const Subspace& x) {
  CheckSameAmbient(x.ambient_dim(), a.ambient_dim());
  return (a.vector() - x.Project(a.vector())).norm() > kOrthTol;
}

Direction ResidualDirection(const Direction& a, const Subspace& x) {
  CheckSameAmbient(x.ambient_dim(), a.ambient_dim());
  Eigen::VectorXd r = a.vector() - x.Project(a.vector());
  // Second pass for orthogonality when a is nearly inside X.
  r -= x.Project(r);
  if (!(r.norm() > kOrthTol)) {
    throw DegenerateInputError("direction lies inside the subspace");
  }
  return Direction::FromVector(r);
}

Subspace Codim1Descend(const Subspace& b, const Direction& w) {
  CheckSameAmbient(b.ambient_dim(), w.ambient_dim());
  if (!b.Contains(w.vector())) {
    throw UsageError("descent direction does not lie in the subspace");
  }
  const int r = b.dim();
  // Coordinates of w in the basis of B; a Householder reflection sends
  // them to e_1 and its remaining columns span their complement.
  Eigen::VectorXd c = b.basis().transpose() * w.vector();
  c.normalize();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr{Eigen::MatrixXd(c)};
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(r, r);
  return Subspace::FromOrthonormal(b.basis() * q.rightCols(r - 1));
}

VectorClosure::VectorClosure(const Subspace& base, const Direction& a)
    : base_(base),
      target_(Join(base, a)),
      residual_(ResidualDirection(a, base)) {}

bool VectorClosure::Contains(const Direction& a) const {
  return IsAdmissible(a, base_) && target_.Contains(a.vector());
}

Direction VectorClosure::Sample(Rng& rng) const {
  Eigen::VectorXd v = residual_.vector();
  if (base_.dim() > 0) {
    Eigen::VectorXd g(base_.dim());
    for (int i = 0; i < g.size(); ++i) g(i) = rng.Normal();
    v += base_.basis() * g;
  }
  return Direction::FromVector(v);
}

}  // namespace dirsub
