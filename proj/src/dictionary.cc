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

#include "dirsub/dictionary.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "dirsub/errors.h"

namespace dirsub {
namespace {

// Beyond this size the bound verification is skipped; span-closed sets form
// a closure system, so joins and meets are correct by construction.
constexpr int kVerifyLimit = 512;

}  // namespace

Dictionary::Dictionary(Eigen::MatrixXd atoms) : atoms_(std::move(atoms)) {
  for (int i = 0; i < size(); ++i) {
    if (std::abs(atoms_.col(i).norm() - 1.0) > kOrthTol) {
      throw ValidationError("dictionary vector " + std::to_string(i) +
                            " is not unit norm");
    }
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      const double c = std::abs(atoms_.col(i).dot(atoms_.col(j)));
      if (1.0 - c < kOrthTol) {
        throw ValidationError("dictionary vectors " + std::to_string(i) +
                              " and " + std::to_string(j) +
                              " span the same line");
      }
    }
  }
}

Dictionary Dictionary::Normalized(const Eigen::MatrixXd& vectors) {
  Eigen::MatrixXd atoms = vectors;
  for (int i = 0; i < atoms.cols(); ++i) {
    const double n = atoms.col(i).norm();
    if (!(n > kOrthTol)) {
      throw ValidationError("dictionary vector " + std::to_string(i) +
                            " is zero");
    }
    atoms.col(i) /= n;
  }
  return Dictionary(std::move(atoms));
}

double CoherenceVectors(const Dictionary& v) {
  if (v.size() < 2) throw UsageError("coherence needs at least two vectors");
  const Eigen::MatrixXd gram = v.atoms().transpose() * v.atoms();
  double mu = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    for (int j = 0; j < v.size(); ++j) {
      if (i != j) mu = std::max(mu, std::abs(gram(i, j)));
    }
  }
  return mu;
}

DictionaryLattice::DictionaryLattice(Dictionary dictionary,
                                     std::vector<Subspace> elements,
                                     std::vector<std::uint32_t> closed,
                                     std::vector<int> by_mask)
    : FiniteLattice(static_cast<int>(elements.size())),
      dictionary_(std::move(dictionary)),
      elements_(std::move(elements)),
      closed_(std::move(closed)),
      by_mask_(std::move(by_mask)) {
  Finalize(std::nullopt, size() <= kVerifyLimit);
}

std::unique_ptr<DictionaryLattice> Enumerate(const Dictionary& dictionary,
                                             int cap) {
  const int m = dictionary.size();
  if (m > cap) {
    throw ResourceError("dictionary has " + std::to_string(m) +
                        " vectors; enumeration cap is " + std::to_string(cap));
  }
  if (m > 20) throw ResourceError("dictionary too large to enumerate");
  const int d = dictionary.ambient_dim();
  const std::uint32_t count = 1u << m;

  // span(S) for every subset, built from span(S minus its lowest item).
  std::vector<Subspace> spans;
  spans.reserve(count);
  spans.push_back(Subspace::Bottom(d));
  std::vector<std::uint32_t> closed_of(count, 0);
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    spans.push_back(Join(spans[mask & (mask - 1)],
                         Direction::FromVector(dictionary.atom(low))));
    std::uint32_t closed = 0;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1u || spans[mask].Contains(dictionary.atom(i))) {
        closed |= 1u << i;
      }
    }
    closed_of[mask] = closed;
  }

  // One element per distinct span; a span is determined by the set of
  // dictionary vectors it contains.
  std::vector<std::uint32_t> keys(closed_of.begin(), closed_of.end());
  std::sort(keys.begin(), keys.end(), [&](std::uint32_t a, std::uint32_t b) {
    const int da = spans[a].dim();
    const int db = spans[b].dim();
    return da != db ? da < db : a < b;
  });
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<int> index_of(count, -1);
  std::vector<Subspace> elements;
  std::vector<std::uint32_t> closed;
  for (std::uint32_t key : keys) {
    index_of[key] = static_cast<int>(elements.size());
    elements.push_back(spans[key]);
    closed.push_back(key);
  }
  std::vector<int> by_mask(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    by_mask[mask] = index_of[closed_of[mask]];
    if (by_mask[mask] < 0 ||
        !Equals(spans[mask], elements[by_mask[mask]])) {
      throw DegenerateInputError(
          "inconsistent span membership; dictionary is numerically "
          "ill-conditioned");
    }
  }
  return std::unique_ptr<DictionaryLattice>(
      new DictionaryLattice(dictionary, std::move(elements), std::move(closed),
                            std::move(by_mask)));
}

std::string DictionaryLattice::Label(ElementId x) const {
  CheckOwned(x);
  std::string out = "<";
  bool first = true;
  for (int i = 0; i < dictionary_.size(); ++i) {
    if ((closed_[x.index()] >> i) & 1u) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + ">";
}

const Subspace& DictionaryLattice::SubspaceOf(ElementId x) const {
  CheckOwned(x);
  return elements_[x.index()];
}

std::uint32_t DictionaryLattice::ClosedMask(ElementId x) const {
  CheckOwned(x);
  return closed_[x.index()];
}

ElementId DictionaryLattice::SpanOf(std::uint32_t mask) const {
  if (mask >= by_mask_.size()) throw UsageError("mask outside dictionary");
  return Make(by_mask_[mask]);
}

Atom DictionaryLattice::AtomOf(int i) const {
  if (i < 0 || i >= dictionary_.size()) {
    throw UsageError("dictionary index out of range");
  }
  return AsAtom(SpanOf(1u << i));
}

std::optional<ElementId> DictionaryLattice::Find(const Subspace& s) const {
  for (int i = 0; i < size(); ++i) {
    if (Equals(elements_[i], s)) return Make(i);
  }
  return std::nullopt;
}

double MaxPrincipalCosine(const Subspace& x, const Subspace& y) {
  if (x.dim() == 0 || y.dim() == 0) return 0.0;
  const Eigen::MatrixXd c = x.basis().transpose() * y.basis();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(c);
  return svd.singularValues()(0);
}

LatticeCoherence CoherenceLattice(const DictionaryLattice& l) {
  const Subspace& top = l.SubspaceOf(l.Top());
  if (top.dim() != top.ambient_dim()) {
    throw UsageError("lattice top is not the whole space");
  }
  LatticeCoherence out;
  const ElementId bottom = l.Bottom();
  const ElementId topid = l.Top();
  for (const ElementId x : l.Elements()) {
    double best = std::numeric_limits<double>::infinity();
    int best_index = -1;
    for (const ElementId y : l.Elements()) {
      if (l.Meet(x, y) != bottom || l.Join(x, y) != topid) continue;
      const double c = MaxPrincipalCosine(l.SubspaceOf(x), l.SubspaceOf(y));
      if (c < best) {
        best = c;
        best_index = y.index();
      }
    }
    if (best_index < 0) out.uncomplemented.push_back(x.index());
    if (out.worst_element < 0 || best > out.value) {
      out.value = best;
      out.worst_element = x.index();
      out.best_complement = best_index;
    }
  }
  return out;
}

}  // namespace dirsub
