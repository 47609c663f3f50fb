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

// dirsub command-line tool. Exit codes: 0 success, 1 an asserted bound
// failed, 2 usage error, 3 invalid input, 4 resource limit, 5 degenerate
// input.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dirsub/diagnostics.h"
#include "dirsub/errors.h"
#include "dirsub/io.h"
#include "dirsub/oracle.h"
#include "dirsub/solvers.h"

namespace dirsub {
namespace {

namespace fs = std::filesystem;

constexpr int kExitBoundFailed = 1;

struct CommonOptions {
  std::string objective;
  std::string lattice;
  std::string strategy = "random-restart";
  std::string descent_strategy;
  double grid_width = 0.025;
  int restarts = 32;
  std::uint64_t seed = 0;
  std::string report;
};

void AddCommon(CLI::App* app, CommonOptions& o, bool solver) {
  app->add_option("--objective", o.objective,
                  "objective JSON, inline or a file path")
      ->required();
  app->add_option("--lattice", o.lattice,
                  "lattice JSON, inline or a file path; omit to work on "
                  "all subspaces of R^d");
  if (solver) {
    app->add_option("--strategy", o.strategy,
                    "inner argmax: exact-eigen, grid, random-restart")
        ->capture_default_str();
    app->add_option("--grid-width", o.grid_width, "grid spacing")
        ->capture_default_str();
    app->add_option("--restarts", o.restarts, "random restarts")
        ->capture_default_str();
  }
  app->add_option("--seed", o.seed, "random seed")->capture_default_str();
  app->add_option("--report", o.report, "write the JSON report here");
}

// Directory used to resolve relative paths inside a JSON argument.
fs::path BaseDir(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos &&
      (arg[first] == '{' || arg[first] == '[')) {
    return fs::current_path();
  }
  return fs::absolute(fs::path(arg)).parent_path();
}

StrategyOptions Strategy(const CommonOptions& o, const std::string& name) {
  StrategyOptions s;
  s.kind = ParseStrategyKind(name);
  s.grid_width = o.grid_width;
  s.restarts = o.restarts;
  s.seed = o.seed;
  return s;
}

void Emit(const Json& report, const std::string& path) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(path, text);
  }
}

struct Problem {
  Json objective;
  fs::path base;
  std::optional<LoadedLattice> lattice;
};

Problem Load(const CommonOptions& o) {
  Problem p;
  p.objective = ParseJsonArgument(o.objective);
  p.base = BaseDir(o.objective);
  if (!o.lattice.empty()) p.lattice = LatticeFromJson(ParseJsonArgument(o.lattice));
  return p;
}

// --cost: {"type": "height", "scale": s, "base": b} or, on finite lattices,
// {"type": "atoms", "weights": [...], "base": b} with weights in
// join-irreducible order, or {"type": "table", "values": [...]}.
Json CostJson(const std::string& arg) {
  if (arg.empty()) return {{"type", "height"}};
  return ParseJsonArgument(arg);
}

double Field(const Json& j, const char* key, double fallback) {
  return j.contains(key) ? j.at(key).get<double>() : fallback;
}

ModularCost FiniteCost(const Json& c, const FiniteLattice& l) {
  const std::string type = c.value("type", "height");
  if (type == "height") {
    return ModularCost::Height(l, Field(c, "scale", 1.0), Field(c, "base", 0.0));
  }
  if (type == "atoms") {
    return ModularCost::AtomWeights(
        l, c.at("weights").get<std::vector<double>>(), Field(c, "base", 0.0));
  }
  if (type == "table") {
    return ModularCost::FromTable(l, c.at("values").get<std::vector<double>>());
  }
  throw UsageError("unknown cost type '" + type + "'");
}

HeightCost VectorCost(const Json& c) {
  if (c.value("type", "height") != "height") {
    throw UsageError("only height costs are defined on all subspaces");
  }
  return {Field(c, "scale", 1.0), Field(c, "base", 0.0)};
}

// ---- Solvers ---------------------------------------------------------------

enum class Solver { kGreedy, kKnapsack, kDoubleGreedy };

int RunSolver(Solver which, const CommonOptions& o, int k, double budget,
              const std::string& cost_arg) {
  const Problem p = Load(o);
  SolveReport rep;
  const FiniteLattice* labels = nullptr;
  if (p.lattice) {
    const LatticeFunction f =
        LatticeFunctionFromJson(p.objective, *p.lattice, p.base);
    labels = p.lattice->lattice.get();
    switch (which) {
      case Solver::kGreedy:
        rep = GreedyHeight(f, k);
        break;
      case Solver::kKnapsack:
        rep = GreedyKnapsack(f, FiniteCost(CostJson(cost_arg), *labels), budget);
        break;
      case Solver::kDoubleGreedy:
        rep = DoubleGreedy(f);
        break;
    }
  } else {
    const auto f = SubspaceObjectiveFromJson(p.objective, p.base);
    auto s = MakeStrategy(Strategy(o, o.strategy));
    switch (which) {
      case Solver::kGreedy:
        rep = GreedyHeight(*f, k, *s);
        break;
      case Solver::kKnapsack:
        rep = GreedyKnapsack(*f, VectorCost(CostJson(cost_arg)), budget, *s);
        break;
      case Solver::kDoubleGreedy: {
        auto t = MakeStrategy(Strategy(
            o, o.descent_strategy.empty() ? o.strategy : o.descent_strategy));
        rep = DoubleGreedy(*f, *s, *t);
        break;
      }
    }
  }
  Emit(ToJson(rep, labels), o.report);
  if (!o.report.empty()) {
    std::cout << rep.algorithm << ": value " << rep.value << ", height "
              << rep.height << ", status " << rep.status << "\n";
  }
  return 0;
}

// ---- Oracle ----------------------------------------------------------------

int RunOracle(const CommonOptions& o, std::optional<int> k,
              std::optional<double> budget, const std::string& cost_arg,
              int cap) {
  const Problem p = Load(o);
  if (!p.lattice) throw UsageError("oracle needs --lattice");
  if (k && budget) throw UsageError("give at most one of --k and --budget");
  const FiniteLattice& l = *p.lattice->lattice;
  const LatticeFunction f = LatticeFunctionFromJson(p.objective, *p.lattice, p.base);
  std::optional<ModularCost> cost;
  OracleConstraint c = OracleConstraint::None();
  if (k) c = OracleConstraint::Height(*k);
  if (budget) {
    cost = FiniteCost(CostJson(cost_arg), l);
    c = OracleConstraint::Cost(*cost, *budget);
  }
  const OracleResult r = BruteForce(f, c, cap);
  Json out = ToJson(r);
  out["constraint"] = k        ? Json{{"height", *k}}
                      : budget ? Json{{"budget", *budget}}
                               : Json("none");
  Emit(out, o.report);
  return 0;
}

// ---- Diagnostics -----------------------------------------------------------

struct DiagnoseOptions {
  std::string direction = "all";
  std::optional<double> max_delta;
  bool coherence_bound = false;
  bool gap_bound = false;
  int samples = 2000;
};

int RunDiagnose(const CommonOptions& o, const DiagnoseOptions& d) {
  const Problem p = Load(o);
  Json out;
  bool ok = true;
  double worst = 0.0;

  if (!p.lattice) {
    if (d.coherence_bound || d.gap_bound) {
      throw UsageError("coherence checks need a dictionary --lattice");
    }
    const auto f = SubspaceObjectiveFromJson(p.objective, p.base);
    Rng rng(o.seed);
    const GapReport g = SampleStrongGap(*f, d.samples, rng);
    out["gaps"] = Json::array({ToJson(g)});
    worst = g.measured_delta;
  } else {
    const FiniteLattice& l = *p.lattice->lattice;
    const LatticeFunction f =
        LatticeFunctionFromJson(p.objective, *p.lattice, p.base);
    std::vector<GapDirection> dirs;
    if (d.direction == "all") {
      dirs = {GapDirection::kDownward, GapDirection::kUpward,
              GapDirection::kStrong};
    } else if (d.direction == "downward") {
      dirs = {GapDirection::kDownward};
    } else if (d.direction == "upward") {
      dirs = {GapDirection::kUpward};
    } else if (d.direction == "strong") {
      dirs = {GapDirection::kStrong};
    } else {
      throw UsageError("--direction must be downward, upward, strong or all");
    }
    out["gaps"] = Json::array();
    double downward = -1.0;
    for (const GapDirection dir : dirs) {
      const GapReport g = MeasureGap(f, dir);
      Json j = ToJson(g, &l);
      if (g.witness.x >= 0) {
        j["witness_reevaluated"] = ReevaluateWitness(f, g);
      }
      out["gaps"].push_back(std::move(j));
      worst = std::max(worst, g.measured_delta);
      if (dir == GapDirection::kDownward) downward = g.measured_delta;
    }

    const DictionaryLattice* dl = p.lattice->AsDictionary();
    if (d.coherence_bound) {
      if (dl == nullptr) throw UsageError("--coherence-bound needs a dictionary");
      const CoherenceBoundCheck c = CheckCoherenceBound(dl->dictionary());
      out["coherence_bound"] = ToJson(c);
      if (!c.skipped && !c.holds) ok = false;
    }
    if (d.gap_bound) {
      if (dl == nullptr) throw UsageError("--gap-bound needs a dictionary");
      const auto sf = SubspaceObjectiveFromJson(p.objective, p.base);
      const double eps = CoherenceLattice(*dl).value;
      double bound = 0.0;
      if (const auto* g = dynamic_cast<const GeneralizedPca*>(sf.get())) {
        bound = CoherenceGapBound(eps, *g);
      } else if (const auto* q = dynamic_cast<const Pca*>(sf.get())) {
        bound = CoherenceGapBound(eps, *q);
      } else {
        throw UsageError("--gap-bound applies to pca and gpca objectives");
      }
      if (downward < 0.0) downward = MeasureDownwardGap(f).measured_delta;
      const bool holds = downward <= bound + 1e-10;
      out["gap_bound"] = {{"lattice_coherence", eps},
                          {"bound", std::isfinite(bound) ? Json(bound)
                                                         : Json(nullptr)},
                          {"downward_delta", downward},
                          {"holds", holds}};
      ok = ok && holds;
    }
  }

  if (d.max_delta) {
    const bool holds = worst <= *d.max_delta;
    out["max_delta"] = {{"asserted", *d.max_delta},
                        {"measured", worst},
                        {"holds", holds}};
    ok = ok && holds;
  }
  out["ok"] = ok;
  Emit(out, o.report);
  if (!ok) std::cerr << "diagnose: an asserted bound failed\n";
  return ok ? 0 : kExitBoundFailed;
}

// ---- Lattice export --------------------------------------------------------

int RunLattice(const std::string& lattice_arg, const std::string& report,
               const std::string& hasse) {
  const LoadedLattice l = LatticeFromJson(ParseJsonArgument(lattice_arg));
  if (!hasse.empty()) {
    std::ostringstream os;
    os << "lower,upper\n";
    for (const auto& [lo, hi] : l.lattice->HasseEdges()) {
      os << lo << "," << hi << "\n";
    }
    WriteTextFile(hasse, os.str());
  }
  Emit(LatticeToJson(*l.lattice), report);
  return 0;
}

// ---- Appendix experiment ---------------------------------------------------

struct AppendixOptions {
  std::uint64_t seed = 0;
  int seeds = 1;
  int n = 1000;
  double q = 0.95;
  std::string rho = "capped-linear";
  std::string strategy = "grid";
  double grid_width = 0.025;
  std::string out_dir = ".";
  std::string report;
};

int RunAppendix(const AppendixOptions& a) {
  if (a.seeds < 1) throw UsageError("--seeds must be at least 1");
  MixtureSpec spec;
  spec.q = a.q;
  spec.n_samples = a.n;
  StrategyOptions s;
  s.kind = ParseStrategyKind(a.strategy);
  s.grid_width = a.grid_width;
  const bool builtin = a.rho == "identity" || a.rho == "log1p" ||
                       a.rho == "capped-linear";
  const ConcaveRho rho = builtin ? ConcaveRho::Builtin(a.rho)
                                 : RhoFromJson(ParseJsonArgument(a.rho));
  fs::create_directories(a.out_dir);

  Json runs = Json::array();
  int pca_hits = 0;
  int gpca_hits = 0;
  for (int i = 0; i < a.seeds; ++i) {
    spec.seed = a.seed + static_cast<std::uint64_t>(i);
    s.seed = spec.seed;
    if (i == 0) {
      const DataSet data = GenerateMixture(spec);
      const fs::path dir(a.out_dir);
      WriteTextFile(dir / "scatter_x1_x2.csv", ScatterCsv(data, 0, 1));
      WriteTextFile(dir / "scatter_x2_x3.csv", ScatterCsv(data, 1, 2));
      WriteTextFile(dir / "scatter_x3_x1.csv", ScatterCsv(data, 2, 0));
    }
    const AppendixResult r = RunAppendixExperiment(spec, rho, s);
    pca_hits += r.pca.aligned && r.pca.plane == "x1-x3";
    gpca_hits += r.gpca.aligned && r.gpca.plane == "x1-x2";
    runs.push_back(ToJson(r));
    std::cout << "seed " << spec.seed << ": pca " << r.pca.plane
              << (r.pca.aligned ? "" : " (not aligned)") << ", gpca "
              << r.gpca.plane << (r.gpca.aligned ? "" : " (not aligned)")
              << "\n";
  }
  const Json summary = {
      {"seeds", a.seeds},
      {"pca_x1_x3", pca_hits},
      {"gpca_x1_x2", gpca_hits},
      {"scatter", {"scatter_x1_x2.csv", "scatter_x2_x3.csv",
                   "scatter_x3_x1.csv"}},
      {"runs", std::move(runs)}};
  const std::string report =
      a.report.empty() ? (fs::path(a.out_dir) / "appendix.json").string()
                       : a.report;
  WriteTextFile(report, summary.dump(2) + "\n");
  std::cout << "pca x1-x3 in " << pca_hits << "/" << a.seeds
            << ", gpca x1-x2 in " << gpca_hits << "/" << a.seeds << "; wrote "
            << report << "\n";
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Directional DR-submodular maximization over lattices"};
  app.require_subcommand(1);

  CommonOptions greedy_o, knap_o, dg_o, oracle_o, diag_o;
  int greedy_k = 0;
  double knap_budget = 0.0;
  std::string knap_cost, oracle_cost;

  auto* greedy = app.add_subcommand("greedy", "greedy under a height bound");
  AddCommon(greedy, greedy_o, true);
  greedy->add_option("--k", greedy_k, "height bound")->required();

  auto* knap = app.add_subcommand("knapsack", "greedy under a modular cost");
  AddCommon(knap, knap_o, true);
  knap->add_option("--budget", knap_budget, "cost budget")->required();
  knap->add_option("--cost", knap_cost,
                   "cost JSON, inline or a file path (default height)");

  auto* dg = app.add_subcommand("double-greedy", "unconstrained double greedy");
  AddCommon(dg, dg_o, true);
  dg->add_option("--descent-strategy", dg_o.descent_strategy,
                 "strategy for the descent step (default --strategy)");

  std::optional<int> oracle_k;
  std::optional<double> oracle_budget;
  int oracle_cap = kDefaultOracleCap;
  auto* oracle = app.add_subcommand("oracle", "brute-force optimum");
  AddCommon(oracle, oracle_o, false);
  oracle->add_option("--k", oracle_k, "height bound");
  oracle->add_option("--budget", oracle_budget, "cost budget");
  oracle->add_option("--cost", oracle_cost, "cost JSON (default height)");
  oracle->add_option("--cap", oracle_cap, "largest lattice to enumerate")
      ->capture_default_str();

  DiagnoseOptions diag_d;
  auto* diag = app.add_subcommand("diagnose", "measure DR gaps");
  AddCommon(diag, diag_o, false);
  diag->add_option("--direction", diag_d.direction,
                   "downward, upward, strong or all")
      ->capture_default_str();
  diag->add_option("--max-delta", diag_d.max_delta,
                   "fail when a measured gap exceeds this");
  diag->add_flag("--coherence-bound", diag_d.coherence_bound,
                 "check the lattice coherence bound of the dictionary");
  diag->add_flag("--gap-bound", diag_d.gap_bound,
                 "check the downward gap against the coherence gap bound");
  diag->add_option("--samples", diag_d.samples,
                   "samples for the strong gap on all subspaces")
      ->capture_default_str();

  std::string lat_arg, lat_report, lat_hasse;
  auto* lat = app.add_subcommand("lattice", "export a lattice");
  lat->add_option("--lattice", lat_arg, "lattice JSON")->required();
  lat->add_option("--report", lat_report, "write the JSON here");
  lat->add_option("--hasse", lat_hasse, "write the Hasse edge list CSV here");

  AppendixOptions appx_o;
  auto* exp = app.add_subcommand("experiment", "reproduction experiments");
  exp->require_subcommand(1);
  auto* appx = exp->add_subcommand("appendix", "Gaussian-mixture PCA");
  appx->add_option("--seed", appx_o.seed, "first seed")->capture_default_str();
  appx->add_option("--seeds", appx_o.seeds, "number of seeds")
      ->capture_default_str();
  appx->add_option("--n", appx_o.n, "samples")->capture_default_str();
  appx->add_option("--q", appx_o.q, "mixing weight")->capture_default_str();
  appx->add_option("--rho", appx_o.rho, "rho name or JSON")
      ->capture_default_str();
  appx->add_option("--strategy", appx_o.strategy, "inner argmax")
      ->capture_default_str();
  appx->add_option("--grid-width", appx_o.grid_width, "grid spacing")
      ->capture_default_str();
  appx->add_option("--out-dir", appx_o.out_dir, "directory for CSV output")
      ->capture_default_str();
  appx->add_option("--report", appx_o.report,
                   "JSON summary path (default <out-dir>/appendix.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*greedy) return RunSolver(Solver::kGreedy, greedy_o, greedy_k, 0, "");
    if (*knap) {
      return RunSolver(Solver::kKnapsack, knap_o, 0, knap_budget, knap_cost);
    }
    if (*dg) return RunSolver(Solver::kDoubleGreedy, dg_o, 0, 0, "");
    if (*oracle) {
      return RunOracle(oracle_o, oracle_k, oracle_budget, oracle_cost,
                       oracle_cap);
    }
    if (*diag) return RunDiagnose(diag_o, diag_d);
    if (*lat) return RunLattice(lat_arg, lat_report, lat_hasse);
    if (*appx) return RunAppendix(appx_o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 4;
  } catch (const DegenerateInputError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 5;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace
}  // namespace dirsub

int main(int argc, char** argv) { return dirsub::Main(argc, argv); }
