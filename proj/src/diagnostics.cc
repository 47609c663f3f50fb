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

#include "dirsub/diagnostics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "dirsub/errors.h"

namespace dirsub {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Admissible atoms of every element, as element indices.
std::vector<std::vector<int>> AdmissibleTable(const FiniteLattice& l) {
  std::vector<std::vector<int>> adm(l.size());
  for (const ElementId x : l.Elements()) {
    for (const Atom& a : l.Admissible(x).atoms) {
      adm[x.index()].push_back(a.index());
    }
  }
  return adm;
}

class Scan {
 public:
  explicit Scan(GapDirection dir) {
    rep_.direction = dir;
    rep_.max_violation = -kInf;
  }
  void Offer(double violation, const GapWitness& w) {
    ++rep_.instances;
    if (violation > rep_.max_violation) {
      rep_.max_violation = violation;
      rep_.witness = w;
    }
  }
  void Exclude() { ++rep_.excluded; }
  GapReport Finish() {
    rep_.measured_delta = std::max(0.0, rep_.max_violation);
    return rep_;
  }

 private:
  GapReport rep_;
};

}  // namespace

std::string GapDirectionName(GapDirection d) {
  switch (d) {
    case GapDirection::kDownward:
      return "downward";
    case GapDirection::kUpward:
      return "upward";
    case GapDirection::kStrong:
      return "strong";
  }
  return "unknown";
}

GapReport MeasureStrongGap(const LatticeFunction& f) {
  const FiniteLattice& l = f.lattice();
  const auto adm = AdmissibleTable(l);
  auto delta = [&](int x, int a) {
    return f.At(l.Join(l.Element(x), l.Element(a)).index()) - f.At(x);
  };
  Scan scan(GapDirection::kStrong);
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (!l.Leq(l.Element(x), l.Element(y))) continue;
      for (const int a : adm[x]) {
        const double rhs = delta(x, a);
        for (const int b : adm[y]) {
          if (!l.Leq(l.Element(a), l.Element(b))) continue;
          scan.Offer(delta(y, b) - rhs, {x, y, a, b, -1});
        }
      }
    }
  }
  return scan.Finish();
}

GapReport MeasureDownwardGap(const LatticeFunction& f) {
  const FiniteLattice& l = f.lattice();
  const auto adm = AdmissibleTable(l);
  auto delta = [&](int x, int a) {
    return f.At(l.Join(l.Element(x), l.Element(a)).index()) - f.At(x);
  };
  // cl(b|Y) for every Y and b in adm(Y).
  std::vector<std::map<int, std::vector<int>>> closure(l.size());
  for (int y = 0; y < l.size(); ++y) {
    for (const int b : adm[y]) {
      for (const Atom& c : l.Closure(l.AsAtom(l.Element(b)), l.Element(y))) {
        closure[y][b].push_back(c.index());
      }
    }
  }
  Scan scan(GapDirection::kDownward);
  for (int x = 0; x < l.size(); ++x) {
    for (int y = 0; y < l.size(); ++y) {
      if (!l.Leq(l.Element(x), l.Element(y))) continue;
      for (const int b : adm[y]) {
        double best = -kInf;
        int best_bp = -1;
        int best_a = -1;
        for (const int bp : closure[y][b]) {
          double lo = kInf;
          int lo_a = -1;
          for (const int a : adm[x]) {
            if (!l.Leq(l.Element(a), l.Element(bp))) continue;
            const double v = delta(x, a);
            if (v < lo) {
              lo = v;
              lo_a = a;
            }
          }
          // An empty min skips this b'.
          if (lo_a < 0) continue;
          if (lo > best) {
            best = lo;
            best_bp = bp;
            best_a = lo_a;
          }
        }
        if (best_bp < 0) {
          scan.Exclude();
          continue;
        }
        scan.Offer(delta(y, b) - best, {x, y, best_a, b, best_bp});
      }
    }
  }
  return scan.Finish();
}

GapReport MeasureUpwardGap(const LatticeFunction& f) {
  const FiniteLattice& l = f.lattice();
  const auto adm = AdmissibleTable(l);
  auto delta = [&](int x, int a) {
    return f.At(l.Join(l.Element(x), l.Element(a)).index()) - f.At(x);
  };
  // (Y, b) -> every Y-ring with b in adm(Y-ring) and Y-ring v b = Y.
  std::map<std::pair<int, int>, std::vector<int>> rings;
  for (int z = 0; z < l.size(); ++z) {
    for (const int b : adm[z]) {
      rings[{l.Join(l.Element(z), l.Element(b)).index(), b}].push_back(z);
    }
  }
  std::vector<int> atoms;
  for (const Atom& a : l.JoinIrreducibles()) atoms.push_back(a.index());

  Scan scan(GapDirection::kUpward);
  for (int x = 0; x < l.size(); ++x) {
    for (const int a : adm[x]) {
      const ElementId xa = l.Join(l.Element(x), l.Element(a));
      const double lhs = delta(x, a);
      for (int y = 0; y < l.size(); ++y) {
        if (!l.Leq(xa, l.Element(y))) continue;
        double best = -kInf;
        int best_b = -1;
        int best_ring = -1;
        for (const int b : atoms) {
          if (!l.Leq(l.Element(a), l.Element(b))) continue;
          const auto it = rings.find({y, b});
          if (it == rings.end()) continue;
          double lo = kInf;
          int lo_ring = -1;
          for (const int z : it->second) {
            if (!l.Leq(l.Element(x), l.Element(z))) continue;
            const double v = f.At(y) - f.At(z);
            if (v < lo) {
              lo = v;
              lo_ring = z;
            }
          }
          if (lo_ring < 0) continue;
          if (lo > best) {
            best = lo;
            best_b = b;
            best_ring = lo_ring;
          }
        }
        if (best_b < 0) {
          scan.Exclude();
          continue;
        }
        scan.Offer(best - lhs, {x, y, a, best_b, best_ring});
      }
    }
  }
  return scan.Finish();
}

GapReport MeasureGap(const LatticeFunction& f, GapDirection direction) {
  switch (direction) {
    case GapDirection::kDownward:
      return MeasureDownwardGap(f);
    case GapDirection::kUpward:
      return MeasureUpwardGap(f);
    case GapDirection::kStrong:
      return MeasureStrongGap(f);
  }
  throw UsageError("unknown gap direction");
}

double ReevaluateWitness(const LatticeFunction& f, const GapReport& report) {
  const GapWitness& w = report.witness;
  if (w.x < 0) {
    throw UsageError("report carries no witness");
  }
  const FiniteLattice& l = f.lattice();
  auto join = [&](int x, int a) {
    return f.At(l.Join(l.Element(x), l.Element(a)).index());
  };
  const double rhs = join(w.x, w.a) - f.At(w.x);
  if (report.direction == GapDirection::kUpward) {
    return f.At(w.y) - f.At(w.aux) - rhs;
  }
  return join(w.y, w.b) - f.At(w.y) - rhs;
}

GapReport SampleStrongGap(const SubspaceObjective& f, int samples, Rng& rng) {
  const int d = f.ambient_dim();
  Scan scan(GapDirection::kStrong);
  for (int s = 0; s < samples; ++s) {
    const int dy = static_cast<int>(rng.UniformInt(d));
    const int dx = static_cast<int>(rng.UniformInt(dy + 1));
    Eigen::MatrixXd g(d, dy);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < dy; ++j) g(i, j) = rng.Normal();
    }
    Eigen::VectorXd bv(d);
    for (int i = 0; i < d; ++i) bv(i) = rng.Normal();
    const Subspace y = dy > 0 ? Subspace::Span(g) : Subspace::Bottom(d);
    const Subspace x = dx > 0 ? Subspace::Span(g.leftCols(dx))
                              : Subspace::Bottom(d);
    if (bv.norm() < 1e-12) continue;
    const Direction b = Direction::FromVector(bv);
    if (!IsAdmissible(b, y)) continue;
    const double lhs = f.Value(Join(y, b)) - f.Value(y);
    const double rhs = f.Value(Join(x, b)) - f.Value(x);
    scan.Offer(lhs - rhs, {});
  }
  GapReport rep = scan.Finish();
  rep.exhaustive = false;
  return rep;
}

bool AllClosuresSingleton(const FiniteLattice& lattice) {
  for (const ElementId x : lattice.Elements()) {
    for (const Atom& a : lattice.Admissible(x).atoms) {
      if (lattice.Closure(a, x).size() != 1) return false;
    }
  }
  return true;
}

EquivalenceCheck CheckGapEquivalence(const FiniteLattice& lattice, int trials,
                                     Rng& rng, double tol) {
  if (!lattice.IsDistributive()) {
    throw UsageError("gap equivalence is only asserted on distributive "
                     "lattices");
  }
  EquivalenceCheck out;
  out.trials = trials;
  out.closures_singleton = AllClosuresSingleton(lattice);
  for (int t = 0; t < trials; ++t) {
    std::vector<double> values(lattice.size());
    for (double& v : values) v = rng.Uniform();
    const LatticeFunction f(lattice, std::move(values));
    const double s = MeasureStrongGap(f).measured_delta;
    const double dn = MeasureDownwardGap(f).measured_delta;
    const double up = MeasureUpwardGap(f).measured_delta;
    out.max_disagreement =
        std::max({out.max_disagreement, std::abs(s - dn), std::abs(s - up),
                  std::abs(dn - up)});
  }
  out.equivalent = out.closures_singleton && out.max_disagreement <= tol;
  return out;
}

CoherenceBoundCheck CheckCoherenceBound(const Dictionary& dictionary,
                                        double tol) {
  CoherenceBoundCheck out;
  out.ambient_dim = dictionary.ambient_dim();
  out.vector_coherence =
      dictionary.size() >= 2 ? CoherenceVectors(dictionary) : 0.0;
  const double de = out.ambient_dim * out.vector_coherence;
  if (de >= 1.0) {
    out.skipped = true;
    out.bound = kInf;
    return out;
  }
  out.bound = de / (1.0 - de);
  out.lattice_coherence = CoherenceLattice(*Enumerate(dictionary)).value;
  out.holds = out.lattice_coherence <= out.bound + tol;
  return out;
}

namespace {

double WeightedEnergy(const DataSet& data) {
  return data.weights().dot(data.norms_sq());
}

double GapBound(double eps, double slope0, double energy) {
  if (eps >= 1.0) return kInf;
  return 3.0 * eps * slope0 * energy / (1.0 - eps * eps);
}

}  // namespace

double CoherenceGapBound(double lattice_coherence, const GeneralizedPca& f) {
  return GapBound(lattice_coherence, f.Slope0(), WeightedEnergy(f.data()));
}

double CoherenceGapBound(double lattice_coherence, const Pca& f) {
  return GapBound(lattice_coherence, 1.0, WeightedEnergy(f.data()));
}

}  // namespace dirsub
