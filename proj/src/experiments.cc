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

#include "dirsub/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "dirsub/errors.h"

namespace dirsub {
namespace {

Eigen::MatrixXd Gaussian(Rng& rng, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = rng.Normal();
  }
  return m;
}

void CheckVariances(const Eigen::VectorXd& s, const char* name) {
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s(i)) || s(i) < 0.0) {
      throw UsageError(std::string(name) +
                       " must hold finite nonnegative variances");
    }
  }
}

MethodResult Summarize(const std::string& method, const SolveReport& rep,
                       double threshold) {
  MethodResult m;
  m.method = method;
  m.report = rep;
  m.value = rep.value;
  m.aligned = !rep.trace.empty();
  std::vector<int> axes;
  for (const auto& rec : rep.trace) {
    const Eigen::VectorXd c = rec.direction.cwiseAbs();
    Eigen::Index axis = 0;
    const double top = c.maxCoeff(&axis);
    m.directions.push_back(rec.direction);
    m.axis_cosines.push_back(c);
    m.dominant_axes.push_back(static_cast<int>(axis));
    if (!(top > threshold)) m.aligned = false;
    axes.push_back(static_cast<int>(axis));
  }
  std::sort(axes.begin(), axes.end());
  if (std::adjacent_find(axes.begin(), axes.end()) != axes.end()) {
    m.aligned = false;
  }
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (i > 0) m.plane += "-";
    m.plane += "x" + std::to_string(axes[i] + 1);
  }
  return m;
}

}  // namespace

DataSet GenerateMixture(const MixtureSpec& spec) {
  if (!(spec.q >= 0.0 && spec.q <= 1.0)) {
    throw UsageError("mixing weight q must lie in [0, 1]");
  }
  if (spec.sigma1.size() == 0 || spec.sigma1.size() != spec.sigma2.size()) {
    throw UsageError("covariance diagonals must be nonempty and equal length");
  }
  CheckVariances(spec.sigma1, "sigma1");
  CheckVariances(spec.sigma2, "sigma2");
  if (spec.n_samples < 0) throw UsageError("n_samples must be nonnegative");
  const int d = static_cast<int>(spec.sigma1.size());
  const Eigen::VectorXd s1 = spec.sigma1.cwiseSqrt();
  const Eigen::VectorXd s2 = spec.sigma2.cwiseSqrt();
  Rng rng(spec.seed);
  Eigen::MatrixXd u(d, spec.n_samples);
  for (int i = 0; i < spec.n_samples; ++i) {
    const Eigen::VectorXd& s = rng.Uniform() < spec.q ? s1 : s2;
    for (int k = 0; k < d; ++k) u(k, i) = s(k) * rng.Normal();
  }
  return DataSet(std::move(u));
}

AppendixResult RunAppendixExperiment(const MixtureSpec& spec,
                                     const ConcaveRho& rho,
                                     const StrategyOptions& strategy,
                                     double alignment_threshold) {
  const auto start = std::chrono::steady_clock::now();
  AppendixResult out;
  out.spec = spec;
  out.rho = rho.name();
  out.strategy = StrategyName(strategy.kind);
  const DataSet data = GenerateMixture(spec);

  const Pca pca(data);
  auto s1 = MakeStrategy(strategy);
  out.pca = Summarize("pca", GreedyHeight(pca, 2, *s1), alignment_threshold);

  const GeneralizedPca gpca(data, rho);
  auto s2 = MakeStrategy(strategy);
  out.gpca =
      Summarize("gpca", GreedyHeight(gpca, 2, *s2), alignment_threshold);

  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

std::string ScatterCsv(const DataSet& data, int i, int j) {
  const int d = data.ambient_dim();
  if (i < 0 || j < 0 || i >= d || j >= d) {
    throw UsageError("scatter axes out of range");
  }
  std::ostringstream os;
  os << std::setprecision(17);
  os << "x" << i + 1 << ",x" << j + 1 << "\n";
  for (int n = 0; n < data.size(); ++n) {
    os << data.vectors()(i, n) << "," << data.vectors()(j, n) << "\n";
  }
  return os.str();
}

Dictionary RandomDictionary(Rng& rng, int d, int m) {
  if (d < 1 || m < 1) throw UsageError("need d >= 1 and m >= 1");
  return Dictionary::Normalized(Gaussian(rng, d, m));
}

Dictionary NearCollinearDictionary(Rng& rng, int d, double eps, int extra) {
  if (d < 2) throw UsageError("near-collinear dictionaries need d >= 2");
  if (!(eps > 0.0)) throw UsageError("eps must be positive");
  const Eigen::MatrixXd q =
      Eigen::HouseholderQR<Eigen::MatrixXd>(Gaussian(rng, d, d))
          .householderQ();
  const int e = std::clamp(extra, 0, d - 1);
  Eigen::MatrixXd v(d, d + e);
  v.leftCols(d) = q;
  for (int i = 0; i < e; ++i) {
    v.col(d + i) = (q.col(i) + eps * q.col(i + 1)).normalized();
  }
  return Dictionary(v);
}

Dictionary LowCoherenceDictionary(Rng& rng, int d, int m, int restarts,
                                  int iterations) {
  if (d < 1 || m < 2) throw UsageError("need d >= 1 and m >= 2");
  constexpr int kPower = 8;
  Eigen::MatrixXd best;
  double best_mu = 2.0;
  for (int r = 0; r < std::max(1, restarts); ++r) {
    Eigen::MatrixXd v = Gaussian(rng, d, m);
    v.colwise().normalize();
    for (int it = 0; it < iterations; ++it) {
      Eigen::MatrixXd g = v.transpose() * v;
      g.diagonal().setZero();
      const double mu = g.cwiseAbs().maxCoeff();
      if (mu < best_mu) {
        best_mu = mu;
        best = v;
      }
      if (mu == 0.0) break;
      // Gradient of sum (g_ij / mu)^(2p), dominated by the worst pairs.
      const Eigen::MatrixXd w = (g / mu).array().pow(2 * kPower - 1).matrix();
      Eigen::MatrixXd grad = v * w;
      // Keep the step tangent to the sphere.
      for (int j = 0; j < m; ++j) {
        grad.col(j) -= grad.col(j).dot(v.col(j)) * v.col(j);
      }
      const double gn = grad.colwise().norm().maxCoeff();
      if (gn < 1e-15) break;
      const double step = 0.05 * (1.0 - static_cast<double>(it) / iterations) +
                          1e-3;
      v -= step * grad / gn;
      v.colwise().normalize();
    }
  }
  return Dictionary(best);
}

WeightedDigraph RandomDigraph(Rng& rng, int d, int nv, int ne) {
  if (nv < 2 || ne < 0) throw UsageError("need nv >= 2 and ne >= 0");
  std::vector<Edge> edges;
  for (int e = 0; e < ne; ++e) {
    const int i = static_cast<int>(rng.UniformInt(nv));
    int j = static_cast<int>(rng.UniformInt(nv - 1));
    if (j >= i) ++j;
    edges.push_back({i, j, 0.1 + rng.Uniform()});
  }
  return WeightedDigraph(Gaussian(rng, d, nv), std::move(edges));
}

}  // namespace dirsub
