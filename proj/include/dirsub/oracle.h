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

// Exhaustive maximization on small finite lattices, and the approximation
// guarantees solver outputs are checked against.

#ifndef DIRSUB_ORACLE_H_
#define DIRSUB_ORACLE_H_

#include <cstdint>
#include <string>

#include "dirsub/objectives.h"

namespace dirsub {

struct OracleConstraint {
  enum class Kind { kNone, kHeight, kCost };
  Kind kind = Kind::kNone;
  int k = 0;
  const ModularCost* cost = nullptr;
  double budget = 0.0;

  static OracleConstraint None() { return {}; }
  static OracleConstraint Height(int k) { return {Kind::kHeight, k}; }
  static OracleConstraint Cost(const ModularCost& c, double budget) {
    return {Kind::kCost, 0, &c, budget};
  }
};

struct OracleResult {
  // -1 when no element is feasible.
  int optimum_index = -1;
  std::string optimum_label;
  double value = 0.0;
  std::int64_t feasible_count = 0;
  double seconds = 0.0;
};

constexpr int kDefaultOracleCap = 4096;

// Scans every element in index order; ties keep the lowest index. Throws
// ResourceError when the lattice has more than `cap` elements.
OracleResult BruteForce(const LatticeFunction& f,
                        const OracleConstraint& constraint,
                        int cap = kDefaultOracleCap);

// f(alg) >= ratio * f(opt) - additive, up to tol.
bool VerifyRatio(double alg_value, double opt_value, double ratio,
                 double additive, double tol = 1e-10);

// Guarantee of greedy under a height bound k on a p-incremental lattice,
// with inner steps that are alpha-approximate:
// ratio 1 - exp(-alpha floor(k/p) / k), additive delta * ratio * k.
struct Guarantee {
  double ratio = 0.0;
  double additive = 0.0;
};
Guarantee GreedyHeightGuarantee(int k, int p, double delta,
                                double alpha = 1.0);
// ((1 - 1/e) / 2, delta h(X*) (1 - 1/e) / 2).
Guarantee KnapsackGuarantee(int optimum_height, double delta);
// (1/3, delta h(L)).
Guarantee DoubleGreedyGuarantee(int lattice_height, double delta);

}  // namespace dirsub

#endif  // DIRSUB_ORACLE_H_
