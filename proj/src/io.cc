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

#include "dirsub/io.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "dirsub/errors.h"

namespace dirsub {
namespace {

namespace fs = std::filesystem;

const Json& Require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

double Number(const Json& j, const char* what) {
  if (!j.is_number()) {
    throw ValidationError(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

int Integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ValidationError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

Eigen::VectorXd VectorFromJson(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw ValidationError(std::string(what) + " must be an array");
  }
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = Number(j[i], what);
  return v;
}

Json VectorToJson(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

fs::path Resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

// Splits on commas and whitespace.
std::vector<std::string> Tokens(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : line) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool ParseDouble(const std::string& s, double& out) {
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end != s.c_str() && *end == '\0';
}

Eigen::MatrixXd DataMatrix(const Json& data, const fs::path& base) {
  if (data.is_string()) {
    std::ifstream in(Resolve(base, data.get<std::string>()));
    if (!in) {
      throw UsageError("cannot open data file '" + data.get<std::string>() +
                       "'");
    }
    return ColumnsFromCsv(in);
  }
  return RowsFromJson(data).transpose();
}

DataSet DataFromObjective(const Json& j, const fs::path& base) {
  Eigen::MatrixXd u = DataMatrix(Require(j, "data"), base);
  if (j.contains("weights")) {
    return DataSet(std::move(u), VectorFromJson(j.at("weights"), "weights"));
  }
  return DataSet(std::move(u));
}

WeightedDigraph GraphFromObjective(const Json& j, const fs::path& base) {
  const Json& g = Require(j, "graph");
  if (g.is_string()) {
    return DigraphFromJson(ReadJsonFile(Resolve(base, g.get<std::string>())));
  }
  return DigraphFromJson(g);
}

std::string Type(const Json& j) {
  const Json& t = Require(j, "type");
  if (!t.is_string()) throw ValidationError("'type' must be a string");
  return t.get<std::string>();
}

Json LabelOrNull(const FiniteLattice* l, int index) {
  if (l == nullptr || index < 0) return nullptr;
  return l->Label(l->Element(index));
}

Json TraceToJson(const std::vector<IterationRecord>& trace,
                 const FiniteLattice* l, bool double_greedy) {
  Json out = Json::array();
  for (const auto& r : trace) {
    Json e = {{"iteration", r.iteration},
              {"action", r.action},
              {"marginal", r.marginal},
              {"value", r.value},
              {"height", r.height}};
    if (r.atom >= 0) {
      e["atom"] = r.atom;
      if (l != nullptr) e["atom_label"] = LabelOrNull(l, r.atom);
    }
    if (r.direction.size() > 0) e["direction"] = VectorToJson(r.direction);
    if (!double_greedy) e["cost_increment"] = r.cost_increment;
    if (double_greedy) {
      e["alpha"] = r.alpha;
      e["beta"] = r.beta;
      e["alpha_plus_beta"] = r.alpha + r.beta;
      e["value_upper"] = r.value_upper;
      e["height_upper"] = r.height_upper;
      e["lower_leq_upper"] = r.lower_leq_upper;
      if (r.lower_index >= 0) {
        e["lower"] = LabelOrNull(l, r.lower_index);
        e["upper"] = LabelOrNull(l, r.upper_index);
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

// ---- Files -----------------------------------------------------------------

std::string ReadTextFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteTextFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw UsageError("failed writing '" + path.string() + "'");
}

Json ReadJsonFile(const fs::path& path) {
  try {
    return Json::parse(ReadTextFile(path));
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + path.string() +
                          "': " + e.what());
  }
}

Json ParseJsonArgument(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string::npos &&
      (text_or_path[first] == '{' || text_or_path[first] == '[' ||
       text_or_path[first] == '"')) {
    try {
      return Json::parse(text_or_path);
    } catch (const Json::parse_error& e) {
      throw ValidationError(std::string("malformed inline JSON: ") + e.what());
    }
  }
  return ReadJsonFile(text_or_path);
}

// ---- Matrices --------------------------------------------------------------

Eigen::MatrixXd RowsFromJson(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of rows");
  if (j.empty()) return Eigen::MatrixXd(0, 0);
  if (!j[0].is_array()) throw ValidationError("expected an array of rows");
  const std::size_t cols = j[0].size();
  Eigen::MatrixXd m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ValidationError("rows must all have length " +
                            std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Number(j[r][c], "entry");
  }
  return m;
}

Json RowsToJson(const Eigen::MatrixXd& rows) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    out.push_back(VectorToJson(rows.row(r).transpose()));
  }
  return out;
}

Eigen::MatrixXd ColumnsFromCsv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = Tokens(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    std::vector<double> row;
    bool numeric = true;
    for (const auto& t : toks) {
      double v = 0.0;
      if (!ParseDouble(t, v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (rows.empty()) continue;  // header
      throw ValidationError("non-numeric CSV entry on line " +
                            std::to_string(lineno));
    }
    if (!rows.empty() && row.size() != rows[0].size()) {
      throw ValidationError("CSV line " + std::to_string(lineno) + " has " +
                            std::to_string(row.size()) + " fields, expected " +
                            std::to_string(rows[0].size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ValidationError("CSV holds no data rows");
  Eigen::MatrixXd m(rows[0].size(), rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) {
    for (std::size_t r = 0; r < rows[c].size(); ++r) m(r, c) = rows[c][r];
  }
  return m;
}

// ---- Domain types ----------------------------------------------------------

Subspace SubspaceFromJson(const Json& j) {
  const int d = Integer(Require(j, "ambient_dim"), "ambient_dim");
  const Json& b = Require(j, "basis");
  if (b.is_array() && b.empty()) return Subspace::Bottom(d);
  const Eigen::MatrixXd rows = RowsFromJson(b);
  if (rows.cols() != d) {
    throw ValidationError("basis vectors must have length ambient_dim");
  }
  return Subspace::Span(rows.transpose());
}

Json SubspaceToJson(const Subspace& x) {
  return {{"ambient_dim", x.ambient_dim()},
          {"dim", x.dim()},
          {"basis", RowsToJson(x.basis().transpose())}};
}

DataSet DataSetFromCsv(std::istream& in) { return DataSet(ColumnsFromCsv(in)); }

DataSet DataSetFromFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path.string() + "'");
  return DataSetFromCsv(in);
}

namespace {

Dictionary CheckedDictionary(Eigen::MatrixXd v, double tolerance) {
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    const double n = v.col(c).norm();
    if (std::abs(n - 1.0) > tolerance) {
      throw ValidationError("dictionary vector " + std::to_string(c) +
                            " has norm " + std::to_string(n) +
                            ", outside the unit tolerance");
    }
    v.col(c) /= n;
  }
  return Dictionary(std::move(v));
}

}  // namespace

Dictionary DictionaryFromCsv(std::istream& in, double tolerance) {
  return CheckedDictionary(ColumnsFromCsv(in), tolerance);
}

Dictionary DictionaryFromJson(const Json& j, double tolerance) {
  return CheckedDictionary(RowsFromJson(j).transpose(), tolerance);
}

WeightedDigraph DigraphFromJson(const Json& j) {
  const Eigen::MatrixXd v = RowsFromJson(Require(j, "vertices")).transpose();
  std::vector<Edge> edges;
  const Json& e = Require(j, "edges");
  if (!e.is_array()) throw ValidationError("'edges' must be an array");
  for (const Json& t : e) {
    if (!t.is_array() || t.size() != 3) {
      throw ValidationError("each edge must be [i, j, c]");
    }
    edges.push_back({Integer(t[0], "edge endpoint"),
                     Integer(t[1], "edge endpoint"),
                     Number(t[2], "edge weight")});
  }
  return WeightedDigraph(v, std::move(edges));
}

Json DigraphToJson(const WeightedDigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.from, e.to, e.weight});
  return {{"vertices", RowsToJson(g.vertices().transpose())},
          {"edges", std::move(edges)}};
}

namespace {

ConcaveRho::KnotList KnotsFromJson(const Json& j) {
  ConcaveRho::KnotList k;
  if (!j.is_array()) throw ValidationError("knots must be an array");
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw ValidationError("each knot must be [t, value]");
    }
    k.emplace_back(Number(p[0], "knot"), Number(p[1], "knot"));
  }
  return k;
}

Json KnotsToJson(const ConcaveRho::KnotList& k) {
  Json out = Json::array();
  for (const auto& [t, v] : k) out.push_back({t, v});
  return out;
}

}  // namespace

ConcaveRho RhoFromJson(const Json& j) {
  if (j.is_string()) return ConcaveRho::Builtin(j.get<std::string>());
  if (!j.is_object()) throw ValidationError("rho must be a string or object");
  if (j.contains("builtin")) {
    const std::string name = j.at("builtin").get<std::string>();
    if (name == "capped-linear") {
      return ConcaveRho::CappedLinear(
          j.contains("fraction") ? Number(j.at("fraction"), "fraction") : 0.01,
          j.contains("slope") ? Number(j.at("slope"), "slope") : 0.1);
    }
    return ConcaveRho::Builtin(name);
  }
  if (j.contains("knots")) return ConcaveRho::Knots(KnotsFromJson(j.at("knots")));
  if (j.contains("per_datum")) {
    std::vector<ConcaveRho::KnotList> all;
    for (const Json& k : j.at("per_datum")) all.push_back(KnotsFromJson(k));
    return ConcaveRho::PerDatumKnots(std::move(all));
  }
  throw ValidationError("rho object needs 'builtin', 'knots' or 'per_datum'");
}

Json RhoToJson(const ConcaveRho& rho) {
  switch (rho.kind()) {
    case ConcaveRho::Kind::kIdentity:
    case ConcaveRho::Kind::kLog1p:
      return rho.name();
    case ConcaveRho::Kind::kCappedLinear:
      return {{"builtin", "capped-linear"},
              {"fraction", rho.fraction()},
              {"slope", rho.slope()}};
    case ConcaveRho::Kind::kKnots:
      break;
  }
  // Stored knots include the prepended origin; re-reading accepts it.
  if (rho.knots().size() == 1) return {{"knots", KnotsToJson(rho.knots()[0])}};
  Json all = Json::array();
  for (const auto& k : rho.knots()) all.push_back(KnotsToJson(k));
  return {{"per_datum", std::move(all)}};
}

const DictionaryLattice* LoadedLattice::AsDictionary() const {
  return dynamic_cast<const DictionaryLattice*>(lattice.get());
}

const SetLattice* LoadedLattice::AsSet() const {
  return dynamic_cast<const SetLattice*>(lattice.get());
}

LoadedLattice LatticeFromJson(const Json& j) {
  const Json& kind = Require(j, "kind");
  const Json& atoms = Require(j, "atoms");
  const double tol =
      j.contains("tolerance") ? Number(j.at("tolerance"), "tolerance")
                              : kOrthTol;
  if (!(tol >= 0.0)) throw ValidationError("tolerance must be nonnegative");
  LoadedLattice out;
  if (kind == "set") {
    if (atoms.is_number_integer()) {
      out.lattice = std::make_unique<SetLattice>(atoms.get<int>());
      return out;
    }
    std::vector<std::string> labels;
    for (const Json& a : atoms) {
      labels.push_back(a.is_string() ? a.get<std::string>() : a.dump());
    }
    const int n = static_cast<int>(labels.size());
    out.lattice = std::make_unique<SetLattice>(n, std::move(labels));
    return out;
  }
  if (kind == "dictionary") {
    out.lattice = Enumerate(DictionaryFromJson(atoms, tol));
    return out;
  }
  throw ValidationError("lattice kind must be 'set' or 'dictionary'");
}

Json LatticeToJson(const FiniteLattice& l) {
  const auto* dl = dynamic_cast<const DictionaryLattice*>(&l);
  Json elements = Json::array();
  for (const ElementId x : l.Elements()) {
    Json e = {{"index", x.index()},
              {"label", l.Label(x)},
              {"height", l.Height(x)}};
    if (dl != nullptr) e["basis"] = SubspaceToJson(dl->SubspaceOf(x))["basis"];
    elements.push_back(std::move(e));
  }
  Json edges = Json::array();
  for (const auto& [lo, hi] : l.HasseEdges()) edges.push_back({lo, hi});
  Json ji = Json::array();
  for (const Atom& a : l.JoinIrreducibles()) ji.push_back(a.index());
  Json out = {{"kind", l.kind()},
              {"size", l.size()},
              {"height", l.height()},
              {"bottom", l.Bottom().index()},
              {"top", l.has_top() ? Json(l.Top().index()) : Json(nullptr)},
              {"is_lattice", l.is_lattice()},
              {"modular", l.IsModular()},
              {"distributive", l.IsDistributive()},
              {"incrementality", l.Incrementality()},
              {"join_irreducibles", std::move(ji)},
              {"elements", std::move(elements)},
              {"hasse_edges", std::move(edges)}};
  if (dl != nullptr) {
    out["ambient_dim"] = dl->dictionary().ambient_dim();
    out["atoms"] = RowsToJson(dl->dictionary().atoms().transpose());
  }
  return out;
}

// ---- Objectives ------------------------------------------------------------

std::unique_ptr<SubspaceObjective> SubspaceObjectiveFromJson(
    const Json& j, const fs::path& base_dir) {
  const std::string type = Type(j);
  if (type == "pca") return std::make_unique<Pca>(DataFromObjective(j, base_dir));
  if (type == "gpca") {
    const ConcaveRho rho =
        j.contains("rho") ? RhoFromJson(j.at("rho")) : ConcaveRho::CappedLinear();
    return std::make_unique<GeneralizedPca>(DataFromObjective(j, base_dir), rho);
  }
  if (type == "qcut") {
    return std::make_unique<QuantumCut>(GraphFromObjective(j, base_dir));
  }
  throw ValidationError("objective type '" + type +
                        "' is not defined on subspaces (expected pca, gpca "
                        "or qcut)");
}

LatticeFunction LatticeFunctionFromJson(const Json& j,
                                        const LoadedLattice& lattice,
                                        const fs::path& base_dir) {
  const std::string type = Type(j);
  const FiniteLattice& l = *lattice.lattice;
  if (type == "table") {
    std::vector<double> values;
    for (const Json& v : Require(j, "values")) values.push_back(Number(v, "value"));
    if (static_cast<int>(values.size()) != l.size()) {
      throw ValidationError("table has " + std::to_string(values.size()) +
                            " values for " + std::to_string(l.size()) +
                            " elements");
    }
    return LatticeFunction(l, std::move(values));
  }
  if (type == "pca" || type == "gpca" || type == "qcut") {
    const DictionaryLattice* dl = lattice.AsDictionary();
    if (dl == nullptr) {
      throw UsageError("objective '" + type + "' needs a dictionary lattice");
    }
    const auto f = SubspaceObjectiveFromJson(j, base_dir);
    if (f->ambient_dim() != dl->dictionary().ambient_dim()) {
      throw ValidationError("objective and dictionary dimensions differ");
    }
    return Tabulate(*f, *dl);
  }
  const SetLattice* sl = lattice.AsSet();
  if (type == "cut" || type == "coverage") {
    if (sl == nullptr) {
      throw UsageError("objective '" + type + "' needs a set lattice");
    }
  }
  if (type == "cut") {
    const WeightedDigraph g = GraphFromObjective(j, base_dir);
    if (g.num_vertices() != sl->ground_set_size()) {
      throw ValidationError("graph vertex count differs from ground set size");
    }
    return CutFunction(*sl, g);
  }
  if (type == "coverage") {
    std::vector<std::vector<int>> cover;
    for (const Json& c : Require(j, "cover")) {
      std::vector<int> items;
      for (const Json& i : c) items.push_back(Integer(i, "item"));
      cover.push_back(std::move(items));
    }
    std::vector<double> w;
    for (const Json& v : Require(j, "item_weights")) {
      w.push_back(Number(v, "item weight"));
    }
    return WeightedCoverage(*sl, cover, w);
  }
  throw ValidationError("unknown objective type '" + type + "'");
}

// ---- Reports ---------------------------------------------------------------

Json ToJson(const SolveReport& r, const FiniteLattice* lattice) {
  const bool dg = r.algorithm == "double-greedy";
  Json out = {{"algorithm", r.algorithm},
              {"strategy", r.strategy},
              {"seed", r.seed},
              {"wall_seconds", r.wall_seconds},
              {"status", r.status},
              {"warnings", r.warnings},
              {"value", r.value},
              {"cost", r.cost},
              {"height", r.height},
              {"iterations", r.trace.size()},
              {"trace", TraceToJson(r.trace, lattice, dg)}};
  if (r.result_index >= 0) {
    out["result"] = {{"index", r.result_index}, {"label", r.result_label}};
  }
  if (r.result_subspace) out["result"] = SubspaceToJson(*r.result_subspace);
  if (r.algorithm == "knapsack") {
    out["greedy_value"] = r.greedy_value;
    out["singleton_value"] = r.singleton_value;
    out["singleton_atom"] =
        r.singleton_atom >= 0 ? Json(r.singleton_atom) : Json(nullptr);
    out["chosen"] = r.chosen;
  }
  if (dg) {
    double worst = std::numeric_limits<double>::infinity();
    bool nested = true;
    for (const auto& t : r.trace) {
      worst = std::min(worst, t.alpha + t.beta);
      nested = nested && t.lower_leq_upper;
    }
    out["min_alpha_plus_beta"] = r.trace.empty() ? Json(nullptr) : Json(worst);
    out["lower_leq_upper_throughout"] = nested;
  }
  return out;
}

Json ToJson(const GapReport& r, const FiniteLattice* lattice) {
  const GapWitness& w = r.witness;
  Json witness = nullptr;
  if (w.x >= 0) {
    witness = {{"x", w.x}, {"y", w.y}, {"a", w.a}, {"b", w.b}};
    if (w.aux >= 0) {
      witness[r.direction == GapDirection::kUpward ? "y_ring" : "b_prime"] =
          w.aux;
    }
    if (lattice != nullptr) {
      Json labels = {{"x", LabelOrNull(lattice, w.x)},
                     {"y", LabelOrNull(lattice, w.y)},
                     {"a", LabelOrNull(lattice, w.a)},
                     {"b", LabelOrNull(lattice, w.b)}};
      if (w.aux >= 0) labels["aux"] = LabelOrNull(lattice, w.aux);
      witness["labels"] = std::move(labels);
    }
  }
  return {{"direction", GapDirectionName(r.direction)},
          {"measured_delta", r.measured_delta},
          {"max_violation",
           std::isfinite(r.max_violation) ? Json(r.max_violation)
                                          : Json(nullptr)},
          {"witness", std::move(witness)},
          {"mode", r.exhaustive ? "exhaustive" : "sampled (lower bound)"},
          {"instances", r.instances},
          {"excluded", r.excluded}};
}

Json ToJson(const OracleResult& r) {
  return {{"optimum_index",
           r.optimum_index >= 0 ? Json(r.optimum_index) : Json(nullptr)},
          {"optimum_label", r.optimum_label},
          {"value", r.value},
          {"feasible_count", r.feasible_count},
          {"seconds", r.seconds}};
}

Json ToJson(const EquivalenceCheck& c) {
  return {{"trials", c.trials},
          {"closures_singleton", c.closures_singleton},
          {"max_disagreement", c.max_disagreement},
          {"equivalent", c.equivalent}};
}

Json ToJson(const CoherenceBoundCheck& c) {
  return {{"vector_coherence", c.vector_coherence},
          {"ambient_dim", c.ambient_dim},
          {"bound", std::isfinite(c.bound) ? Json(c.bound) : Json(nullptr)},
          {"lattice_coherence", c.lattice_coherence},
          {"skipped", c.skipped},
          {"holds", c.holds}};
}

namespace {

Json MethodToJson(const MethodResult& m) {
  Json dirs = Json::array();
  Json cos = Json::array();
  for (std::size_t i = 0; i < m.directions.size(); ++i) {
    dirs.push_back(VectorToJson(m.directions[i]));
    cos.push_back(VectorToJson(m.axis_cosines[i]));
  }
  return {{"method", m.method},
          {"directions", std::move(dirs)},
          {"axis_cosines", std::move(cos)},
          {"dominant_axes", m.dominant_axes},
          {"plane", m.plane},
          {"aligned", m.aligned},
          {"value", m.value}};
}

}  // namespace

Json ToJson(const AppendixResult& r) {
  return {{"spec",
           {{"q", r.spec.q},
            {"sigma1", VectorToJson(r.spec.sigma1)},
            {"sigma2", VectorToJson(r.spec.sigma2)},
            {"n_samples", r.spec.n_samples},
            {"seed", r.spec.seed}}},
          {"rho", r.rho},
          {"strategy", r.strategy},
          {"pca", MethodToJson(r.pca)},
          {"gpca", MethodToJson(r.gpca)},
          {"seconds", r.seconds}};
}

}  // namespace dirsub
