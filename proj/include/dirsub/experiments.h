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

// The Gaussian-mixture PCA experiment and random instance generators.

#ifndef DIRSUB_EXPERIMENTS_H_
#define DIRSUB_EXPERIMENTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dirsub/dictionary.h"
#include "dirsub/objectives.h"
#include "dirsub/rng.h"
#include "dirsub/solvers.h"

namespace dirsub {

// q N(0, diag(sigma1)) + (1 - q) N(0, diag(sigma2)).
struct MixtureSpec {
  double q = 0.95;
  Eigen::VectorXd sigma1 = Eigen::Vector3d(1.0, 0.1, 0.3);
  Eigen::VectorXd sigma2 = Eigen::Vector3d(0.1, 1.0, 0.3);
  int n_samples = 1000;
  std::uint64_t seed = 0;
};

// Per sample: one uniform draw picks the component (first when u < q), then
// one normal draw per coordinate. Throws UsageError on an invalid spec.
DataSet GenerateMixture(const MixtureSpec& spec);

struct MethodResult {
  std::string method;  // "pca" or "gpca"
  std::vector<Eigen::VectorXd> directions;
  // |cos| of each direction with each coordinate axis.
  std::vector<Eigen::VectorXd> axis_cosines;
  // Axis with the largest |cos| for each direction (0-based).
  std::vector<int> dominant_axes;
  // "x1-x3" style label of the dominant axes, sorted.
  std::string plane;
  // Every direction has a dominant |cos| above the threshold, and the
  // dominant axes are distinct.
  bool aligned = false;
  double value = 0.0;
  SolveReport report;
};

struct AppendixResult {
  MixtureSpec spec;
  std::string rho;
  std::string strategy;
  MethodResult pca;
  MethodResult gpca;
  double seconds = 0.0;
};

// Greedy with k = 2 for plain PCA and for generalized PCA with rho, both
// using the given inner strategy.
AppendixResult RunAppendixExperiment(const MixtureSpec& spec,
                                     const ConcaveRho& rho,
                                     const StrategyOptions& strategy,
                                     double alignment_threshold = 0.9);

// Two-column CSV of coordinates (i, j), with header "x<i+1>,x<j+1>".
std::string ScatterCsv(const DataSet& data, int i, int j);

// ---- Random instances ------------------------------------------------------

// m unit vectors with i.i.d. Gaussian entries, normalized.
Dictionary RandomDictionary(Rng& rng, int d, int m);

// A random orthonormal basis of R^d followed by perturbed copies
// normalize(q_i + eps q_{i+1}) for i < min(extra, d - 1).
Dictionary NearCollinearDictionary(Rng& rng, int d, double eps,
                                   int extra = 1);

// Best of `restarts` runs of projected descent on sum |<v_i, v_j>|^p over
// the sphere; returns the dictionary with the smallest coherence found.
Dictionary LowCoherenceDictionary(Rng& rng, int d, int m, int restarts = 8,
                                  int iterations = 400);

// Vertex vectors i.i.d. Gaussian in R^d; ne edges with distinct random
// endpoints and weights uniform in [0.1, 1.1).
WeightedDigraph RandomDigraph(Rng& rng, int d, int nv, int ne);

}  // namespace dirsub

#endif  // DIRSUB_EXPERIMENTS_H_
