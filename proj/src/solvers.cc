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

#include "dirsub/solvers.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <utility>

#include "dirsub/errors.h"

namespace dirsub {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Cost increments at or below this count as free.
constexpr double kZeroCost = 1e-15;
constexpr int kBatch = 256;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::function<double(const Eigen::VectorXd&)> Evaluator(
    const SubspaceObjective& f, const Subspace& base, InnerArgmax::Mode mode) {
  return mode == InnerArgmax::Mode::kJoin ? f.JoinEvaluator(base)
                                          : f.DescendEvaluator(base);
}

void CheckSearch(const Subspace& base, const Eigen::MatrixXd& search) {
  if (search.rows() != base.ambient_dim()) {
    throw UsageError("search basis and base subspace dimensions differ");
  }
}

// Orthonormal basis of B meet A^perp for A <= B.
Eigen::MatrixXd GapBasis(const Subspace& a, const Subspace& b) {
  const int want = b.dim() - a.dim();
  if (a.dim() == 0) return b.basis();
  Eigen::MatrixXd r = b.basis() - a.basis() * (a.basis().transpose() * b.basis());
  Subspace c = Subspace::Span(r);
  if (c.dim() != want) c = Meet(b, OrthoComplement(a));
  if (c.dim() != want) {
    throw DegenerateInputError("lower and upper subspaces lost nesting");
  }
  return c.basis();
}

// The stronger of two density candidates. Free increments rank above all
// priced ones and are compared by raw marginal among themselves.
struct Density {
  bool free = false;
  double value = kNegInf;
  bool Beats(const Density& o) const {
    if (free != o.free) return free;
    return value > o.value;
  }
};

Density MakeDensity(double marginal, double increment) {
  if (increment <= kZeroCost) return {true, marginal};
  return {false, marginal / increment};
}

}  // namespace

StrategyOptions::Kind ParseStrategyKind(const std::string& name) {
  if (name == "exact-eigen") return StrategyOptions::Kind::kExactEigen;
  if (name == "grid") return StrategyOptions::Kind::kGrid;
  if (name == "random-restart") return StrategyOptions::Kind::kRandomRestart;
  throw UsageError("unknown strategy '" + name +
                   "' (expected exact-eigen, grid or random-restart)");
}

std::string StrategyName(StrategyOptions::Kind kind) {
  switch (kind) {
    case StrategyOptions::Kind::kExactEigen:
      return "exact-eigen";
    case StrategyOptions::Kind::kGrid:
      return "grid";
    case StrategyOptions::Kind::kRandomRestart:
      return "random-restart";
  }
  return "unknown";
}

std::unique_ptr<InnerArgmax> MakeStrategy(const StrategyOptions& options) {
  switch (options.kind) {
    case StrategyOptions::Kind::kExactEigen:
      return std::make_unique<InnerArgmaxPca>();
    case StrategyOptions::Kind::kGrid:
      return std::make_unique<InnerArgmaxGrid>(options.grid_width);
    case StrategyOptions::Kind::kRandomRestart:
      return std::make_unique<InnerArgmaxRandomRestart>(
          options.restarts, options.ascent_iterations, options.seed);
  }
  throw UsageError("unknown strategy kind");
}

Eigen::VectorXd EvaluateCandidates(const SubspaceObjective& f,
                                   const Subspace& base,
                                   const Eigen::MatrixXd& r,
                                   InnerArgmax::Mode mode) {
  Eigen::VectorXd out(r.cols());
  const double sign = mode == InnerArgmax::Mode::kJoin ? 1.0 : -1.0;
  if (const auto m = f.QuadraticForm()) {
    // f(X v r) = f(X) + r^T M r, f(B meet w^perp) = f(B) - w^T M w.
    const double base_value = f.Value(base);
    out = ((*m * r).cwiseProduct(r)).colwise().sum().transpose();
    out = (sign * out).array() + base_value;
    return out;
  }
  const auto* pf = dynamic_cast<const ProjectionObjective*>(&f);
  if (pf == nullptr) {
    auto g = Evaluator(f, base, mode);
    for (Eigen::Index j = 0; j < r.cols(); ++j) out(j) = g(r.col(j));
    return out;
  }
  const Eigen::VectorXd p = pf->Projections(base);
  for (Eigen::Index start = 0; start < r.cols(); start += kBatch) {
    const Eigen::Index n = std::min<Eigen::Index>(kBatch, r.cols() - start);
    Eigen::MatrixXd q = pf->vectors().transpose() * r.middleCols(start, n);
    q = (sign * q.array().square()).colwise() + p.array();
    if (sign < 0) q = q.cwiseMax(0.0);
    out.segment(start, n) = pf->FromProjectionsBatch(q);
  }
  return out;
}

// ---- Inner strategies ------------------------------------------------------

std::optional<InnerArgmax::Result> InnerArgmaxPca::Maximize(
    const SubspaceObjective& f, const Subspace& base,
    const Eigen::MatrixXd& search, Mode mode) {
  CheckSearch(base, search);
  const std::optional<Eigen::MatrixXd> m = f.QuadraticForm();
  if (!m) {
    throw UsageError("exact-eigen strategy needs an objective of the form "
                     "trace(Pi_X M); objective '" + f.name() + "' is not");
  }
  if (search.cols() == 0) return std::nullopt;
  const Eigen::MatrixXd s = search.transpose() * (*m) * search;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (s + s.transpose()));
  const Eigen::Index col = mode == Mode::kJoin ? s.cols() - 1 : 0;
  Eigen::VectorXd v = search * eig.eigenvectors().col(col);
  v.normalize();
  return Result{v, Evaluator(f, base, mode)(v)};
}

InnerArgmaxGrid::InnerArgmaxGrid(double width) : width_(width) {
  if (!(width > 0.0) || width > 2.0) {
    throw UsageError("grid width must lie in (0, 2]");
  }
}

std::optional<InnerArgmax::Result> InnerArgmaxGrid::Maximize(
    const SubspaceObjective& f, const Subspace& base,
    const Eigen::MatrixXd& search, Mode mode) {
  CheckSearch(base, search);
  const int d = base.ambient_dim();
  if (d > kMaxAmbientDim) {
    throw UsageError("grid strategy supports ambient dimension at most " +
                     std::to_string(kMaxAmbientDim));
  }
  if (search.cols() == 0) return std::nullopt;
  // Steps along [0, 1] and along [-1, 1].
  const int n0 = static_cast<int>(std::floor(1.0 / width_ + 1e-9)) + 1;
  const int n1 = static_cast<int>(std::floor(2.0 / width_ + 1e-9)) + 1;
  long long total = n0;
  for (int k = 1; k < d; ++k) total *= n1;

  // Grid points in lexicographic order, first coordinate outermost.
  Eigen::MatrixXd pts(d, total);
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    for (int k = d - 1; k >= 1; --k) {
      pts(k, idx) = -1.0 + width_ * static_cast<double>(rest % n1);
      rest /= n1;
    }
    pts(0, idx) = width_ * static_cast<double>(rest);
  }
  Eigen::MatrixXd proj = search * (search.transpose() * pts);
  std::vector<Eigen::Index> kept;
  kept.reserve(total);
  for (Eigen::Index j = 0; j < proj.cols(); ++j) {
    const double n = proj.col(j).norm();
    if (n > 1e-12) {
      proj.col(j) /= n;
      kept.push_back(j);
    }
  }
  if (kept.empty()) return std::nullopt;
  Eigen::MatrixXd cand(d, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) cand.col(j) = proj.col(kept[j]);
  const Eigen::VectorXd vals = EvaluateCandidates(f, base, cand, mode);
  Eigen::Index best = -1;
  for (Eigen::Index j = 0; j < vals.size(); ++j) {
    if (best < 0 || vals(j) > vals(best)) best = j;
  }
  return Result{cand.col(best), vals(best)};
}

InnerArgmaxRandomRestart::InnerArgmaxRandomRestart(int restarts,
                                                   int iterations,
                                                   std::uint64_t seed)
    : restarts_(restarts), iterations_(iterations), rng_(seed) {
  if (restarts < 0 || iterations < 0) {
    throw UsageError("restarts and iterations must be nonnegative");
  }
}

std::optional<InnerArgmax::Result> InnerArgmaxRandomRestart::Maximize(
    const SubspaceObjective& f, const Subspace& base,
    const Eigen::MatrixXd& search, Mode mode) {
  CheckSearch(base, search);
  const int m = static_cast<int>(search.cols());
  if (m == 0) return std::nullopt;
  auto g = Evaluator(f, base, mode);
  auto eval = [&](const Eigen::VectorXd& z) {
    return g(search * (z / z.norm()));
  };
  if (m == 1) {
    const Eigen::VectorXd v = search.col(0).normalized();
    return Result{v, g(v)};
  }

  std::vector<Eigen::VectorXd> starts;
  for (int k = 0; k < m; ++k) starts.push_back(Eigen::VectorXd::Unit(m, k));
  for (int s = 0; s < restarts_; ++s) {
    Eigen::VectorXd z(m);
    do {
      for (int k = 0; k < m; ++k) z(k) = rng_.Normal();
    } while (z.norm() < 1e-12);
    starts.push_back(z.normalized());
  }

  const double h = 1e-6;
  Eigen::VectorXd best_z;
  double best = kNegInf;
  for (Eigen::VectorXd z : starts) {
    double val = eval(z);
    double step = 0.5;
    for (int it = 0; it < iterations_ && step > 1e-9; ++it) {
      Eigen::VectorXd grad(m);
      for (int k = 0; k < m; ++k) {
        Eigen::VectorXd zp = z;
        Eigen::VectorXd zm = z;
        zp(k) += h;
        zm(k) -= h;
        grad(k) = (eval(zp) - eval(zm)) / (2 * h);
      }
      grad -= grad.dot(z) * z;
      const double gn = grad.norm();
      if (gn < 1e-12) break;
      // Backtrack until the step improves.
      while (step > 1e-9) {
        const Eigen::VectorXd trial = (z + step * grad / gn).normalized();
        const double tv = eval(trial);
        if (tv > val) {
          z = trial;
          val = tv;
          step = std::min(1.0, step * 1.5);
          break;
        }
        step *= 0.5;
      }
    }
    if (val > best) {
      best = val;
      best_z = z;
    }
  }
  if (best_z.size() == 0) return std::nullopt;
  return Result{(search * best_z).normalized(), best};
}

// ---- Finite lattices -------------------------------------------------------

SolveReport GreedyHeight(const LatticeFunction& f, int k) {
  if (k < 0) throw UsageError("height bound k must be nonnegative");
  Timer timer;
  const FiniteLattice& l = f.lattice();
  SolveReport rep;
  rep.algorithm = "greedy";
  rep.strategy = "exhaustive";
  ElementId x = l.Bottom();
  for (int it = 1;; ++it) {
    const AdmissibleSet adm = l.Admissible(x);
    int best = -1;
    double best_gain = kNegInf;
    for (std::size_t i = 0; i < adm.atoms.size(); ++i) {
      const ElementId y = l.Join(x, adm.atoms[i]);
      if (l.Height(y) > k) continue;
      const double gain = f(y) - f(x);
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    const Atom a = adm.atoms[best];
    x = l.Join(x, a);
    IterationRecord r;
    r.iteration = it;
    r.action = "add";
    r.atom = a.index();
    r.marginal = best_gain;
    r.value = f(x);
    r.height = l.Height(x);
    r.lower_index = x.index();
    rep.trace.push_back(std::move(r));
  }
  if (l.Height(x) < k && !(l.has_top() && x == l.Top())) {
    rep.warnings.push_back("stopped below the height bound: no admissible "
                           "atom fits");
  }
  rep.result_index = x.index();
  rep.result_label = l.Label(x);
  rep.value = f(x);
  rep.height = l.Height(x);
  rep.cost = rep.height;
  rep.greedy_value = rep.value;
  rep.chosen = "greedy";
  rep.wall_seconds = timer.Seconds();
  return rep;
}

SolveReport GreedyKnapsack(const LatticeFunction& f, const ModularCost& c,
                           double budget) {
  if (&f.lattice() != &c.lattice()) {
    throw UsageError("objective and cost live on different lattices");
  }
  if (!(budget >= 0.0)) throw UsageError("budget must be nonnegative");
  Timer timer;
  const FiniteLattice& l = f.lattice();
  SolveReport rep;
  rep.algorithm = "knapsack";
  rep.strategy = "exhaustive";
  ElementId x = l.Bottom();
  if (c(x) > budget) {
    rep.warnings.push_back("cost of the bottom element exceeds the budget");
  }
  const int max_steps = l.height();
  for (int it = 1; it <= max_steps; ++it) {
    const AdmissibleSet adm = l.Admissible(x);
    int best = -1;
    Density best_d;
    for (std::size_t i = 0; i < adm.atoms.size(); ++i) {
      const ElementId y = l.Join(x, adm.atoms[i]);
      if (c(y) > budget) continue;
      const Density dens = MakeDensity(f(y) - f(x), c(y) - c(x));
      if (best < 0 || dens.Beats(best_d)) {
        best_d = dens;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    const Atom a = adm.atoms[best];
    const ElementId y = l.Join(x, a);
    IterationRecord r;
    r.iteration = it;
    r.action = "add";
    r.atom = a.index();
    r.marginal = f(y) - f(x);
    r.cost_increment = c(y) - c(x);
    x = y;
    r.value = f(x);
    r.height = l.Height(x);
    r.lower_index = x.index();
    rep.trace.push_back(std::move(r));
  }

  rep.greedy_value = f(x);
  ElementId chosen = x;
  const ElementId bot = l.Bottom();
  for (const Atom& a : l.Admissible(bot).atoms) {
    const ElementId y = l.Join(bot, a);
    if (c(y) > budget) continue;
    if (rep.singleton_atom < 0 || f(y) > rep.singleton_value) {
      rep.singleton_value = f(y);
      rep.singleton_atom = a.index();
    }
  }
  rep.chosen = "greedy";
  if (rep.singleton_atom >= 0 && rep.singleton_value > rep.greedy_value) {
    chosen = l.Element(rep.singleton_atom);
    rep.chosen = "singleton";
  }
  rep.result_index = chosen.index();
  rep.result_label = l.Label(chosen);
  rep.value = f(chosen);
  rep.cost = c(chosen);
  rep.height = l.Height(chosen);
  rep.wall_seconds = timer.Seconds();
  return rep;
}

SolveReport DoubleGreedy(const LatticeFunction& f) {
  Timer timer;
  const FiniteLattice& l = f.lattice();
  SolveReport rep;
  rep.algorithm = "double-greedy";
  rep.strategy = "exhaustive";
  ElementId a = l.Bottom();
  ElementId b = l.Top();
  for (int it = 1; a != b; ++it) {
    // Lower covers of B above A, preferring those one level down.
    ElementId b_down;
    double best_down = kNegInf;
    bool graded = false;
    for (const ElementId y : l.LowerCovers(b)) {
      if (!l.Leq(a, y)) continue;
      const bool level = l.Height(y) + 1 == l.Height(b);
      if (level && !graded) {
        graded = true;
        best_down = kNegInf;
      }
      if (graded && !level) continue;
      if (f(y) > best_down) {
        best_down = f(y);
        b_down = y;
      }
    }
    int best_atom = -1;
    double alpha = kNegInf;
    for (const Atom& atom : l.Admissible(a).atoms) {
      if (!l.Leq(atom.element(), b)) continue;
      const double gain = f(l.Join(a, atom)) - f(a);
      if (gain > alpha) {
        alpha = gain;
        best_atom = atom.index();
      }
    }
    if (!b_down.valid() || best_atom < 0) {
      rep.status = "stalled: no move between lower and upper element";
      break;
    }
    const double beta = f(b_down) - f(b);
    IterationRecord r;
    r.iteration = it;
    r.alpha = alpha;
    r.beta = beta;
    if (alpha >= beta) {
      r.action = "ascend";
      r.atom = best_atom;
      r.marginal = alpha;
      a = l.Join(a, l.Element(best_atom));
    } else {
      r.action = "descend";
      r.marginal = beta;
      b = b_down;
    }
    r.value = f(a);
    r.height = l.Height(a);
    r.value_upper = f(b);
    r.height_upper = l.Height(b);
    r.lower_index = a.index();
    r.upper_index = b.index();
    r.lower_leq_upper = l.Leq(a, b);
    rep.trace.push_back(std::move(r));
  }
  rep.result_index = a.index();
  rep.result_label = l.Label(a);
  rep.value = f(a);
  rep.height = l.Height(a);
  rep.wall_seconds = timer.Seconds();
  return rep;
}

// ---- L(R^d) ----------------------------------------------------------------

namespace {

// Shared loop of the vector greedy variants; `fits` decides whether one
// more dimension is affordable from X.
Subspace VectorGreedy(const SubspaceObjective& f, InnerArgmax& strategy,
                      const std::function<bool(const Subspace&)>& fits,
                      const HeightCost* cost, SolveReport& rep) {
  const int d = f.ambient_dim();
  Subspace x = Subspace::Bottom(d);
  double fx = f.Value(x);
  try {
    for (int it = 1; x.dim() < d && fits(x); ++it) {
      const Eigen::MatrixXd c = OrthoComplement(x).basis();
      const auto res = strategy.Maximize(f, x, c, InnerArgmax::Mode::kJoin);
      if (!res) break;
      const Direction r = ResidualDirection(Direction::FromVector(
                                                res->direction), x);
      const Subspace y = Join(x, r);
      const double fy = f.Value(y);
      IterationRecord rec;
      rec.iteration = it;
      rec.action = "add";
      rec.direction = r.vector();
      rec.marginal = fy - fx;
      rec.cost_increment = cost ? (*cost)(y) - (*cost)(x) : 1.0;
      x = y;
      fx = fy;
      rec.value = fx;
      rec.height = x.dim();
      rep.trace.push_back(std::move(rec));
    }
  } catch (const DegenerateInputError& e) {
    rep.status = std::string("degenerate: ") + e.what();
  }
  return x;
}

}  // namespace

SolveReport GreedyHeight(const SubspaceObjective& f, int k,
                         InnerArgmax& strategy) {
  if (k < 0) throw UsageError("height bound k must be nonnegative");
  Timer timer;
  SolveReport rep;
  rep.algorithm = "greedy";
  rep.strategy = strategy.name();
  if (k > f.ambient_dim()) {
    rep.warnings.push_back("k exceeds the ambient dimension; capped");
  }
  const Subspace x = VectorGreedy(
      f, strategy, [k](const Subspace& s) { return s.dim() < k; }, nullptr,
      rep);
  rep.value = f.Value(x);
  rep.height = x.dim();
  rep.cost = x.dim();
  rep.greedy_value = rep.value;
  rep.chosen = "greedy";
  rep.result_subspace = x;
  rep.wall_seconds = timer.Seconds();
  return rep;
}

SolveReport GreedyKnapsack(const SubspaceObjective& f, const HeightCost& c,
                           double budget, InnerArgmax& strategy) {
  if (!(budget >= 0.0)) throw UsageError("budget must be nonnegative");
  if (c.scale < 0.0 || c.base < 0.0) {
    throw ValidationError("height cost needs nonnegative scale and base");
  }
  Timer timer;
  SolveReport rep;
  rep.algorithm = "knapsack";
  rep.strategy = strategy.name();
  const int d = f.ambient_dim();
  if (c(Subspace::Bottom(d)) > budget) {
    rep.warnings.push_back("cost of the bottom element exceeds the budget");
  }
  // Every line costs the same, so density order equals marginal order.
  const Subspace x = VectorGreedy(
      f, strategy,
      [&](const Subspace& s) { return c(s) + c.scale <= budget; }, &c, rep);
  rep.greedy_value = f.Value(x);

  std::optional<Subspace> single;
  const Subspace bot = Subspace::Bottom(d);
  if (c.base + c.scale <= budget) {
    const auto res = strategy.Maximize(f, bot, Eigen::MatrixXd::Identity(d, d),
                                       InnerArgmax::Mode::kJoin);
    if (res) {
      single = Join(bot, Direction::FromVector(res->direction));
      rep.singleton_value = f.Value(*single);
      rep.singleton_atom = 0;
    }
  }
  rep.chosen = "greedy";
  Subspace chosen = x;
  if (single && rep.singleton_value > rep.greedy_value) {
    chosen = *single;
    rep.chosen = "singleton";
  }
  rep.result_subspace = chosen;
  rep.value = f.Value(chosen);
  rep.cost = c(chosen);
  rep.height = chosen.dim();
  rep.wall_seconds = timer.Seconds();
  return rep;
}

SolveReport DoubleGreedy(const SubspaceObjective& f, InnerArgmax& ascent,
                         InnerArgmax& descent) {
  Timer timer;
  SolveReport rep;
  rep.algorithm = "double-greedy";
  rep.strategy = ascent.name() == descent.name()
                     ? ascent.name()
                     : ascent.name() + "/" + descent.name();
  const int d = f.ambient_dim();
  Subspace a = Subspace::Bottom(d);
  Subspace b = Subspace::Top(d);
  double fa = f.Value(a);
  double fb = f.Value(b);
  try {
    for (int it = 1; a.dim() < b.dim(); ++it) {
      const Eigen::MatrixXd c = GapBasis(a, b);
      const auto up = ascent.Maximize(f, a, c, InnerArgmax::Mode::kJoin);
      const auto down = descent.Maximize(f, b, c, InnerArgmax::Mode::kDescend);
      if (!up || !down) {
        rep.status = "stalled: inner search returned no candidate";
        break;
      }
      // Each search's direction is also tried in the other role; ties keep
      // the role's own candidate.
      const Direction r = Direction::FromVector(up->direction);
      const Direction w = Direction::FromVector(down->direction);
      const Subspace a_r = Join(a, r);
      const Subspace a_w = Join(a, w);
      const Subspace b_w = Codim1Descend(b, w);
      const Subspace b_r = Codim1Descend(b, r);
      const double alpha_r = f.Value(a_r) - fa;
      const double alpha_w = f.Value(a_w) - fa;
      const double beta_w = f.Value(b_w) - fb;
      const double beta_r = f.Value(b_r) - fb;
      const bool use_r = alpha_r >= alpha_w;
      const bool use_w = beta_w >= beta_r;
      const double alpha = use_r ? alpha_r : alpha_w;
      const double beta = use_w ? beta_w : beta_r;

      IterationRecord rec;
      rec.iteration = it;
      rec.alpha = alpha;
      rec.beta = beta;
      if (alpha >= beta) {
        rec.action = "ascend";
        rec.direction = use_r ? r.vector() : w.vector();
        rec.marginal = alpha;
        a = use_r ? a_r : a_w;
        fa = f.Value(a);
      } else {
        rec.action = "descend";
        rec.direction = use_w ? w.vector() : r.vector();
        rec.marginal = beta;
        b = use_w ? b_w : b_r;
        fb = f.Value(b);
      }
      rec.value = fa;
      rec.height = a.dim();
      rec.value_upper = fb;
      rec.height_upper = b.dim();
      rec.lower_leq_upper = Leq(a, b);
      rep.trace.push_back(std::move(rec));
    }
  } catch (const DegenerateInputError& e) {
    rep.status = std::string("degenerate: ") + e.what();
  }
  for (const auto& rec : rep.trace) {
    if (rec.alpha + rec.beta < -1e-9) {
      rep.warnings.push_back("alpha + beta < 0 at iteration " +
                             std::to_string(rec.iteration) +
                             "; the inner search was not exact enough");
    }
  }
  rep.result_subspace = a;
  rep.value = fa;
  rep.height = a.dim();
  rep.wall_seconds = timer.Seconds();
  return rep;
}

}  // namespace dirsub
