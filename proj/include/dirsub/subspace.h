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

// The lattice L(R^d) of linear subspaces.
//
// A Subspace stores an orthonormal d x r basis; r is its height. All
// operations are pure functions on immutable values.

#ifndef DIRSUB_SUBSPACE_H_
#define DIRSUB_SUBSPACE_H_

#include <Eigen/Dense>

#include "dirsub/rng.h"

namespace dirsub {

// Singular values below kRankTol * sigma_max count as zero.
inline constexpr double kRankTol = 1e-9;
// Orthonormality and membership tolerance.
inline constexpr double kOrthTol = 1e-8;
// Max-abs projector difference under which two subspaces are equal.
inline constexpr double kEqTol = 1e-8;

class Direction;

class Subspace {
 public:
  // The zero subspace of R^d (a d x 0 basis).
  static Subspace Bottom(int ambient_dim);
  // R^d itself (identity basis).
  static Subspace Top(int ambient_dim);
  // Span of the columns of a d x m generator matrix.
  static Subspace Span(const Eigen::MatrixXd& generators);
  // Takes the columns as given; throws UsageError unless they are
  // orthonormal within kOrthTol.
  static Subspace FromOrthonormal(const Eigen::MatrixXd& basis);
  // span{e_i : i in axes}.
  static Subspace Axes(int ambient_dim, const std::vector<int>& axes);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Eigen::MatrixXd& basis() const { return basis_; }

  Eigen::MatrixXd Projector() const { return basis_ * basis_.transpose(); }
  Eigen::VectorXd Project(const Eigen::VectorXd& v) const;
  // ||Pi_X v||^2.
  double ProjectedNormSq(const Eigen::VectorXd& v) const;
  bool Contains(const Eigen::VectorXd& v) const;

 private:
  explicit Subspace(Eigen::MatrixXd basis) : basis_(std::move(basis)) {}
  Eigen::MatrixXd basis_;
};

// A unit vector, identified with the 1-dimensional subspace it spans.
class Direction {
 public:
  // Normalizes v; throws DegenerateInputError when v is (numerically) zero.
  static Direction FromVector(const Eigen::VectorXd& v);
  static Direction Axis(int ambient_dim, int axis);

  int ambient_dim() const { return static_cast<int>(vector_.size()); }
  const Eigen::VectorXd& vector() const { return vector_; }
  Subspace AsSubspace() const;

 private:
  explicit Direction(Eigen::VectorXd v) : vector_(std::move(v)) {}
  Eigen::VectorXd vector_;
};

// Join is the span of the union, built by Gram-Schmidt continuation of the
// first argument's basis.
Subspace Join(const Subspace& x, const Subspace& y);
Subspace Join(const Subspace& x, const Direction& a);
// Intersection, from the nullspace of [Pi_X - I; Pi_Y - I].
Subspace Meet(const Subspace& x, const Subspace& y);
Subspace OrthoComplement(const Subspace& x);

bool Leq(const Subspace& x, const Subspace& y);
bool Equals(const Subspace& x, const Subspace& y);

// Every direction outside X is admissible to X.
bool IsAdmissible(const Direction& a, const Subspace& x);
// Unit vector along a - Pi_X a. Throws DegenerateInputError when a lies in X.
Direction ResidualDirection(const Direction& a, const Subspace& x);
// B meet w^perp. Throws UsageError unless w lies in B.
Subspace Codim1Descend(const Subspace& b, const Direction& w);

// cl(a | X) on the vector lattice: the directions a' outside X with
// X v a' = X v a. Not enumerable; offers membership and sampling.
class VectorClosure {
 public:
  VectorClosure(const Subspace& base, const Direction& a);

  const Subspace& base() const { return base_; }
  const Subspace& target() const { return target_; }
  const Direction& residual() const { return residual_; }
  bool Contains(const Direction& a) const;
  // A random member: the residual plus a Gaussian component inside the base.
  Direction Sample(Rng& rng) const;

 private:
  Subspace base_;
  Subspace target_;
  Direction residual_;
};

// Height of the vector lattice is 1-incremental.
inline constexpr int kVectorLatticeIncrementality = 1;

}  // namespace dirsub

#endif  // DIRSUB_SUBSPACE_H_
