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

// File formats.
//
//   lattice     {"kind": "set" | "dictionary", "atoms": [...],
//                "tolerance": t}
//               set atoms are item labels; dictionary atoms are vectors,
//               normalized when their norm is within t of 1.
//   subspace    {"ambient_dim": d, "basis": [[...], ...]}, one basis vector
//               per row.
//   data        CSV, one vector per row; an optional non-numeric header.
//   digraph     {"vertices": [[...], ...], "edges": [[i, j, c], ...]}
//   rho         "identity" | "log1p" | "capped-linear"
//               | {"builtin": "capped-linear", "fraction": f, "slope": s}
//               | {"knots": [[t, v], ...]} | {"per_datum": [[[t, v], ...]]}
//   objective   {"type": "pca" | "gpca" | "qcut" | "cut" | "coverage"
//                         | "table", ...}; see SubspaceObjectiveFromJson
//               and LatticeFunctionFromJson.

#ifndef DIRSUB_IO_H_
#define DIRSUB_IO_H_

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "dirsub/diagnostics.h"
#include "dirsub/dictionary.h"
#include "dirsub/experiments.h"
#include "dirsub/lattice.h"
#include "dirsub/objectives.h"
#include "dirsub/oracle.h"
#include "dirsub/solvers.h"
#include "dirsub/subspace.h"

namespace dirsub {

using Json = nlohmann::json;

// Throws UsageError when the file cannot be read or written, and
// ValidationError on malformed JSON.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path,
                   const std::string& text);
Json ReadJsonFile(const std::filesystem::path& path);
// Accepts inline JSON text or a path to a JSON file.
Json ParseJsonArgument(const std::string& text_or_path);

// ---- Matrices and vectors --------------------------------------------------

// Rows of numbers, all the same length. Throws ValidationError.
Eigen::MatrixXd RowsFromJson(const Json& j);
Json RowsToJson(const Eigen::MatrixXd& rows);
// Parses CSV text; each row becomes one column of the result.
Eigen::MatrixXd ColumnsFromCsv(std::istream& in);

// ---- Domain types ----------------------------------------------------------

Subspace SubspaceFromJson(const Json& j);
Json SubspaceToJson(const Subspace& x);

DataSet DataSetFromCsv(std::istream& in);
DataSet DataSetFromFile(const std::filesystem::path& path);

Dictionary DictionaryFromCsv(std::istream& in, double tolerance = kOrthTol);
Dictionary DictionaryFromJson(const Json& j, double tolerance = kOrthTol);

WeightedDigraph DigraphFromJson(const Json& j);
Json DigraphToJson(const WeightedDigraph& g);

ConcaveRho RhoFromJson(const Json& j);
Json RhoToJson(const ConcaveRho& rho);

// A lattice read from JSON, with typed views of it.
struct LoadedLattice {
  std::unique_ptr<FiniteLattice> lattice;
  const DictionaryLattice* AsDictionary() const;
  const SetLattice* AsSet() const;
};
LoadedLattice LatticeFromJson(const Json& j);
// Elements (index, label, height, and basis for dictionary lattices), Hasse
// edges, join-irreducibles and structural flags.
Json LatticeToJson(const FiniteLattice& lattice);

// ---- Objectives ------------------------------------------------------------

// Objectives on L(R^d):
//   {"type": "pca", "data": <csv path | rows>, "weights": [...]}
//   {"type": "gpca", "data": ..., "weights": ..., "rho": <rho>}
//   {"type": "qcut", "graph": <digraph | json path>}
// Relative paths resolve against base_dir.
std::unique_ptr<SubspaceObjective> SubspaceObjectiveFromJson(
    const Json& j, const std::filesystem::path& base_dir = {});

// Functions on a finite lattice: the subspace objectives above (tabulated,
// dictionary lattices only) and
//   {"type": "cut", "graph": ...}                     set lattices
//   {"type": "coverage", "cover": [[...]], "item_weights": [...]}
//   {"type": "table", "values": [...]}                any lattice
LatticeFunction LatticeFunctionFromJson(
    const Json& j, const LoadedLattice& lattice,
    const std::filesystem::path& base_dir = {});

// ---- Reports ---------------------------------------------------------------

// Element labels are included when the lattice is given.
Json ToJson(const SolveReport& report, const FiniteLattice* lattice = nullptr);
Json ToJson(const GapReport& report, const FiniteLattice* lattice = nullptr);
Json ToJson(const OracleResult& result);
Json ToJson(const EquivalenceCheck& check);
Json ToJson(const CoherenceBoundCheck& check);
Json ToJson(const AppendixResult& result);

}  // namespace dirsub

#endif  // DIRSUB_IO_H_
