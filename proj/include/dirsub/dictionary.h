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

// The dictionary lattice L(V) = {span(S) : S subset of V}.

#ifndef DIRSUB_DICTIONARY_H_
#define DIRSUB_DICTIONARY_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dirsub/lattice.h"
#include "dirsub/subspace.h"

namespace dirsub {

// Unit vectors u_1..u_m in R^d, pairwise distinct as lines.
class Dictionary {
 public:
  // Columns of `atoms` are the vectors. Throws ValidationError when a column
  // is not unit norm within kOrthTol or two columns span the same line.
  explicit Dictionary(Eigen::MatrixXd atoms);
  // Same, after scaling every column to unit norm.
  static Dictionary Normalized(const Eigen::MatrixXd& vectors);

  int ambient_dim() const { return static_cast<int>(atoms_.rows()); }
  int size() const { return static_cast<int>(atoms_.cols()); }
  const Eigen::MatrixXd& atoms() const { return atoms_; }
  Eigen::VectorXd atom(int i) const { return atoms_.col(i); }

 private:
  Eigen::MatrixXd atoms_;
};

// max_{i != j} |<u_i, u_j>|. Throws UsageError for fewer than two vectors.
double CoherenceVectors(const Dictionary& v);

class DictionaryLattice : public FiniteLattice {
 public:
  static constexpr int kDefaultCap = 12;

  std::string kind() const override { return "dictionary"; }
  std::string Label(ElementId x) const override;

  const Dictionary& dictionary() const { return dictionary_; }
  const Subspace& SubspaceOf(ElementId x) const;
  // Indices of dictionary vectors lying in x, as a bitmask.
  std::uint32_t ClosedMask(ElementId x) const;
  // span{u_i : i in mask}.
  ElementId SpanOf(std::uint32_t mask) const;
  // The line spanned by u_i.
  Atom AtomOf(int i) const;
  // Element equal to s, if s is in the lattice.
  std::optional<ElementId> Find(const Subspace& s) const;

 protected:
  bool LeqIndex(int x, int y) const override {
    return (closed_[x] & ~closed_[y]) == 0;
  }
  int JoinIndex(int x, int y) const override {
    return by_mask_[closed_[x] | closed_[y]];
  }
  int MeetIndex(int x, int y) const override {
    return by_mask_[closed_[x] & closed_[y]];
  }

 private:
  friend std::unique_ptr<DictionaryLattice> Enumerate(const Dictionary&, int);
  DictionaryLattice(Dictionary dictionary, std::vector<Subspace> elements,
                    std::vector<std::uint32_t> closed,
                    std::vector<int> by_mask);

  Dictionary dictionary_;
  std::vector<Subspace> elements_;
  std::vector<std::uint32_t> closed_;
  std::vector<int> by_mask_;  // subset mask -> element index of its span
};

// Computes every span(S), deduplicates, and builds the order structure.
// Throws ResourceError when |V| exceeds cap.
std::unique_ptr<DictionaryLattice> Enumerate(
    const Dictionary& dictionary, int cap = DictionaryLattice::kDefaultCap);

struct LatticeCoherence {
  // +infinity when some element has no complement.
  double value = 0.0;
  // Element attaining the max, and its best complement.
  int worst_element = -1;
  int best_complement = -1;
  // Elements lacking any complement.
  std::vector<int> uncomplemented;
};

// max over X of min over complements X' (X meet X' = bottom, X join X' = top)
// of the largest principal-angle cosine between X and X'. Throws UsageError
// unless the top element is all of R^d.
LatticeCoherence CoherenceLattice(const DictionaryLattice& l);

// Largest singular value of U_x^T U_y; 0 when either side is trivial.
double MaxPrincipalCosine(const Subspace& x, const Subspace& y);

}  // namespace dirsub

#endif  // DIRSUB_DICTIONARY_H_
