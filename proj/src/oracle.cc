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

#include "dirsub/oracle.h"

#include <chrono>
#include <cmath>

#include "dirsub/errors.h"

namespace dirsub {

OracleResult BruteForce(const LatticeFunction& f,
                        const OracleConstraint& constraint, int cap) {
  const FiniteLattice& l = f.lattice();
  if (l.size() > cap) {
    throw ResourceError("lattice has " + std::to_string(l.size()) +
                        " elements; oracle cap is " + std::to_string(cap));
  }
  if (constraint.kind == OracleConstraint::Kind::kCost) {
    if (constraint.cost == nullptr || &constraint.cost->lattice() != &l) {
      throw UsageError("cost constraint must live on the objective's lattice");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  OracleResult out;
  for (const ElementId x : l.Elements()) {
    bool ok = true;
    switch (constraint.kind) {
      case OracleConstraint::Kind::kNone:
        break;
      case OracleConstraint::Kind::kHeight:
        ok = l.Height(x) <= constraint.k;
        break;
      case OracleConstraint::Kind::kCost:
        ok = (*constraint.cost)(x) <= constraint.budget;
        break;
    }
    if (!ok) continue;
    ++out.feasible_count;
    if (out.optimum_index < 0 || f(x) > out.value) {
      out.optimum_index = x.index();
      out.value = f(x);
    }
  }
  if (out.optimum_index >= 0) {
    out.optimum_label = l.Label(l.Element(out.optimum_index));
  }
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

bool VerifyRatio(double alg_value, double opt_value, double ratio,
                 double additive, double tol) {
  return alg_value >= ratio * opt_value - additive - tol;
}

Guarantee GreedyHeightGuarantee(int k, int p, double delta, double alpha) {
  if (k < 0 || p < 1) throw UsageError("need k >= 0 and p >= 1");
  if (k == 0) return {};
  const double r = 1.0 - std::exp(-alpha * (k / p) / static_cast<double>(k));
  return {r, delta * r * k};
}

Guarantee KnapsackGuarantee(int optimum_height, double delta) {
  const double r = (1.0 - std::exp(-1.0)) / 2.0;
  return {r, delta * optimum_height * r};
}

Guarantee DoubleGreedyGuarantee(int lattice_height, double delta) {
  return {1.0 / 3.0, delta * lattice_height};
}

}  // namespace dirsub
