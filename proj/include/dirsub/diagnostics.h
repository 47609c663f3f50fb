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

// Measured additive gaps of the three DR inequalities, and checks of the
// coherence bounds.
//
// A gap is the largest violation LHS - RHS over all instances of the
// inequality; measured_delta clamps it at 0.

#ifndef DIRSUB_DIAGNOSTICS_H_
#define DIRSUB_DIAGNOSTICS_H_

#include <cstdint>
#include <string>

#include "dirsub/dictionary.h"
#include "dirsub/lattice.h"
#include "dirsub/objectives.h"
#include "dirsub/rng.h"

namespace dirsub {

enum class GapDirection { kDownward, kUpward, kStrong };
std::string GapDirectionName(GapDirection d);

// Element indices of the instance attaining the largest violation.
//   strong:   f(Y v b) - f(Y) - [f(X v a) - f(X)]
//   downward: f(Y v b) - f(Y) - [f(X v a) - f(X)], aux = b' in cl(b|Y)
//             attaining the max, a the minimizer under it
//   upward:   f(Y) - f(aux) - [f(X v a) - f(X)], aux = Y-ring attaining the
//             min under the maximizing b
struct GapWitness {
  int x = -1;
  int y = -1;
  int a = -1;
  int b = -1;
  int aux = -1;
};

struct GapReport {
  GapDirection direction = GapDirection::kStrong;
  double measured_delta = 0.0;
  // Largest LHS - RHS seen, possibly negative; -inf when nothing was scanned.
  double max_violation = 0.0;
  GapWitness witness;
  bool exhaustive = true;
  // Instances compared, and instances excluded because every inner min was
  // over an empty set.
  std::int64_t instances = 0;
  std::int64_t excluded = 0;
};

GapReport MeasureStrongGap(const LatticeFunction& f);
GapReport MeasureDownwardGap(const LatticeFunction& f);
GapReport MeasureUpwardGap(const LatticeFunction& f);
GapReport MeasureGap(const LatticeFunction& f, GapDirection direction);

// Recomputes the violation from the witness alone.
double ReevaluateWitness(const LatticeFunction& f, const GapReport& report);

// Strong-gap lower bound on L(R^d) from random nested X <= Y and lines b
// outside Y: max of [f(Y v b) - f(Y)] - [f(X v b) - f(X)].
GapReport SampleStrongGap(const SubspaceObjective& f, int samples, Rng& rng);

// True when cl(a|X) = {a} for every X and a in adm(X).
bool AllClosuresSingleton(const FiniteLattice& lattice);

struct EquivalenceCheck {
  int trials = 0;
  bool closures_singleton = true;
  // Largest pairwise difference among the three gaps over all trials.
  double max_disagreement = 0.0;
  bool equivalent = true;
};

// Draws `trials` functions with values uniform in [0, 1) and compares the
// three gaps. Throws UsageError unless the lattice is distributive.
EquivalenceCheck CheckGapEquivalence(const FiniteLattice& lattice, int trials,
                                     Rng& rng, double tol = 1e-12);

struct CoherenceBoundCheck {
  double vector_coherence = 0.0;  // mu(V)
  int ambient_dim = 0;
  // d * mu / (1 - d * mu); infinite when skipped.
  double bound = 0.0;
  double lattice_coherence = 0.0;
  bool skipped = false;
  bool holds = true;
};

// Compares mu(L(V)) against d mu(V) / (1 - d mu(V)); skipped when
// d mu(V) >= 1.
CoherenceBoundCheck CheckCoherenceBound(const Dictionary& dictionary,
                                        double tol = 1e-9);

// 3 eps rho'(0) sum_j w_j ||v_j||^2 / (1 - eps^2), the additive gap bound
// for generalized PCA on a lattice with coherence eps.
double CoherenceGapBound(double lattice_coherence, const GeneralizedPca& f);
double CoherenceGapBound(double lattice_coherence, const Pca& f);

}  // namespace dirsub

#endif  // DIRSUB_DIAGNOSTICS_H_
