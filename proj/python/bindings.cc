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

// Reports cross the boundary as JSON text; the Python package decodes them.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "dirsub/diagnostics.h"
#include "dirsub/errors.h"
#include "dirsub/experiments.h"
#include "dirsub/io.h"
#include "dirsub/oracle.h"
#include "dirsub/solvers.h"

namespace py = pybind11;

namespace dirsub {
namespace {

StrategyOptions Strategy(const std::string& name, std::uint64_t seed,
                         double grid_width, int restarts) {
  StrategyOptions s;
  s.kind = ParseStrategyKind(name);
  s.seed = seed;
  s.grid_width = grid_width;
  s.restarts = restarts;
  return s;
}

Json Parse(const std::string& text) { return ParseJsonArgument(text); }

std::string Solve(const std::string& algorithm, const std::string& objective,
                  const std::optional<std::string>& lattice, int k,
                  double budget, const std::string& strategy,
                  std::uint64_t seed, double grid_width, int restarts) {
  const Json obj = Parse(objective);
  if (lattice) {
    const LoadedLattice l = LatticeFromJson(Parse(*lattice));
    const LatticeFunction f = LatticeFunctionFromJson(obj, l);
    SolveReport r;
    if (algorithm == "greedy") {
      r = GreedyHeight(f, k);
    } else if (algorithm == "knapsack") {
      r = GreedyKnapsack(f, ModularCost::Height(*l.lattice), budget);
    } else {
      r = DoubleGreedy(f);
    }
    return ToJson(r, l.lattice.get()).dump();
  }
  const auto f = SubspaceObjectiveFromJson(obj);
  auto s = MakeStrategy(Strategy(strategy, seed, grid_width, restarts));
  SolveReport r;
  if (algorithm == "greedy") {
    r = GreedyHeight(*f, k, *s);
  } else if (algorithm == "knapsack") {
    r = GreedyKnapsack(*f, HeightCost{}, budget, *s);
  } else {
    auto t = MakeStrategy(Strategy(strategy, seed, grid_width, restarts));
    r = DoubleGreedy(*f, *s, *t);
  }
  return ToJson(r).dump();
}

std::string Oracle(const std::string& objective, const std::string& lattice,
                   std::optional<int> k) {
  const LoadedLattice l = LatticeFromJson(Parse(lattice));
  const LatticeFunction f = LatticeFunctionFromJson(Parse(objective), l);
  return ToJson(BruteForce(f, k ? OracleConstraint::Height(*k)
                                : OracleConstraint::None()))
      .dump();
}

std::string Gap(const std::string& objective, const std::string& lattice,
                const std::string& direction) {
  const LoadedLattice l = LatticeFromJson(Parse(lattice));
  const LatticeFunction f = LatticeFunctionFromJson(Parse(objective), l);
  GapDirection d = GapDirection::kStrong;
  if (direction == "downward") {
    d = GapDirection::kDownward;
  } else if (direction == "upward") {
    d = GapDirection::kUpward;
  } else if (direction != "strong") {
    throw UsageError("direction must be downward, upward or strong");
  }
  return ToJson(MeasureGap(f, d), l.lattice.get()).dump();
}

double ObjectiveValue(const std::string& objective,
                      const Eigen::MatrixXd& basis_rows) {
  const auto f = SubspaceObjectiveFromJson(Parse(objective));
  if (basis_rows.size() == 0) return f->Value(Subspace::Bottom(f->ambient_dim()));
  return f->Value(Subspace::Span(basis_rows.transpose()));
}

Eigen::MatrixXd Mixture(double q, int n, std::uint64_t seed) {
  MixtureSpec spec;
  spec.q = q;
  spec.n_samples = n;
  spec.seed = seed;
  return GenerateMixture(spec).vectors().transpose();
}

std::string Appendix(std::uint64_t seed, int n, const std::string& strategy,
                     double grid_width) {
  MixtureSpec spec;
  spec.seed = seed;
  spec.n_samples = n;
  return ToJson(RunAppendixExperiment(
                    spec, ConcaveRho::CappedLinear(),
                    Strategy(strategy, seed, grid_width, 32)))
      .dump();
}

double LatticeCoherenceOf(const Eigen::MatrixXd& vectors_rows) {
  const auto l = Enumerate(Dictionary::Normalized(vectors_rows.transpose()));
  return CoherenceLattice(*l).value;
}

}  // namespace
}  // namespace dirsub

PYBIND11_MODULE(_dirsub, m) {
  using namespace dirsub;
  m.doc() = "Native core of the dirsub package.";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError",
                                        PyExc_RuntimeError);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError",
                                               PyExc_ArithmeticError);

  m.def("solve", &Solve, py::arg("algorithm"), py::arg("objective"),
        py::arg("lattice") = std::nullopt, py::arg("k") = 0,
        py::arg("budget") = 0.0, py::arg("strategy") = "random-restart",
        py::arg("seed") = 0, py::arg("grid_width") = 0.025,
        py::arg("restarts") = 32);
  m.def("oracle", &Oracle, py::arg("objective"), py::arg("lattice"),
        py::arg("k") = std::nullopt);
  m.def("gap", &Gap, py::arg("objective"), py::arg("lattice"),
        py::arg("direction") = "strong");
  m.def("lattice_json",
        [](const std::string& lattice) {
          return LatticeToJson(*LatticeFromJson(Parse(lattice)).lattice).dump();
        },
        py::arg("lattice"));
  m.def("objective_value", &ObjectiveValue, py::arg("objective"),
        py::arg("basis"));
  m.def("generate_mixture", &Mixture, py::arg("q") = 0.95,
        py::arg("n") = 1000, py::arg("seed") = 0);
  m.def("appendix", &Appendix, py::arg("seed") = 0, py::arg("n") = 1000,
        py::arg("strategy") = "grid", py::arg("grid_width") = 0.025);
  m.def("lattice_coherence", &LatticeCoherenceOf, py::arg("vectors"));
}
