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

#include "dirsub/lattice.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <sstream>

#include "dirsub/errors.h"

namespace dirsub {
namespace {

std::atomic<std::uint32_t> next_tag{1};

int PopCount(const std::uint64_t* row, int words) {
  int count = 0;
  for (int w = 0; w < words; ++w) count += std::popcount(row[w]);
  return count;
}

bool IsSubset(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int w = 0; w < words; ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

}  // namespace

FiniteLattice::FiniteLattice(int size) : tag_(next_tag++), size_(size) {
  if (size <= 0) throw UsageError("a lattice needs at least one element");
}

std::string FiniteLattice::Label(ElementId x) const {
  CheckOwned(x);
  return "#" + std::to_string(x.index());
}

void FiniteLattice::CheckOwned(ElementId x) const {
  if (x.lattice_tag() != tag_ || x.index() < 0 || x.index() >= size_) {
    throw UsageError("element handle does not belong to this lattice");
  }
}

ElementId FiniteLattice::Element(int index) const {
  if (index < 0 || index >= size_) {
    throw UsageError("element index out of range: " + std::to_string(index));
  }
  return Make(index);
}

std::vector<ElementId> FiniteLattice::Elements() const {
  std::vector<ElementId> out;
  out.reserve(size_);
  for (int i = 0; i < size_; ++i) out.push_back(Make(i));
  return out;
}

ElementId FiniteLattice::Top() const {
  if (top_ < 0) throw UsageError("lattice has no greatest element");
  return Make(top_);
}

bool FiniteLattice::Leq(ElementId x, ElementId y) const {
  CheckOwned(x);
  CheckOwned(y);
  return DownContains(y.index(), x.index());
}

ElementId FiniteLattice::Join(ElementId x, ElementId y) const {
  CheckOwned(x);
  CheckOwned(y);
  const int j = JoinIndex(x.index(), y.index());
  if (j < 0) throw UsageError("pair has no least upper bound");
  return Make(j);
}

ElementId FiniteLattice::Meet(ElementId x, ElementId y) const {
  CheckOwned(x);
  CheckOwned(y);
  const int m = MeetIndex(x.index(), y.index());
  if (m < 0) throw UsageError("pair has no greatest lower bound");
  return Make(m);
}

int FiniteLattice::Height(ElementId x) const {
  CheckOwned(x);
  return height_[x.index()];
}

int FiniteLattice::height() const {
  return *std::max_element(height_.begin(), height_.end());
}

bool FiniteLattice::IsJoinIrreducible(ElementId x) const {
  CheckOwned(x);
  return ji_lower_cover_[x.index()] >= 0;
}

Atom FiniteLattice::AsAtom(ElementId x) const {
  if (!IsJoinIrreducible(x)) {
    throw UsageError("element " + Label(x) + " is not join-irreducible");
  }
  return Atom(x);
}

ElementId FiniteLattice::LowerCoverOf(Atom a) const {
  CheckOwned(a.element());
  return Make(ji_lower_cover_[a.index()]);
}

bool FiniteLattice::IsAdmissible(Atom a, ElementId x) const {
  CheckOwned(a.element());
  CheckOwned(x);
  // Every a' < a lies below the unique lower cover of a.
  return !DownContains(x.index(), a.index()) &&
         DownContains(x.index(), ji_lower_cover_[a.index()]);
}

bool FiniteLattice::IsAdmissible(ElementId a, ElementId x) const {
  return IsAdmissible(AsAtom(a), x);
}

AdmissibleSet FiniteLattice::Admissible(ElementId x) const {
  CheckOwned(x);
  AdmissibleSet out{x, {}};
  for (const Atom& a : atoms_) {
    if (IsAdmissible(a, x)) out.atoms.push_back(a);
  }
  return out;
}

std::vector<Atom> FiniteLattice::Closure(Atom a, ElementId x) const {
  if (!IsAdmissible(a, x)) {
    throw UsageError("closure requires an admissible atom");
  }
  const int target = JoinIndex(x.index(), a.index());
  std::vector<Atom> out;
  for (const Atom& b : atoms_) {
    if (IsAdmissible(b, x) && JoinIndex(x.index(), b.index()) == target) {
      out.push_back(b);
    }
  }
  return out;
}

int FiniteLattice::Incrementality() const {
  int p = 0;
  for (int x = 0; x < size_; ++x) {
    for (const Atom& a : atoms_) {
      if (!IsAdmissible(a, Make(x))) continue;
      const int j = JoinIndex(x, a.index());
      if (j >= 0) p = std::max(p, height_[j] - height_[x]);
    }
  }
  return p;
}

std::vector<ElementId> FiniteLattice::LowerCovers(ElementId x) const {
  CheckOwned(x);
  std::vector<ElementId> out;
  for (int i : lower_[x.index()]) out.push_back(Make(i));
  return out;
}

std::vector<ElementId> FiniteLattice::UpperCovers(ElementId x) const {
  CheckOwned(x);
  std::vector<ElementId> out;
  for (int i : upper_[x.index()]) out.push_back(Make(i));
  return out;
}

std::vector<std::pair<int, int>> FiniteLattice::HasseEdges() const {
  std::vector<std::pair<int, int>> edges;
  for (int y = 0; y < size_; ++y) {
    for (int x : lower_[y]) edges.emplace_back(x, y);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool FiniteLattice::IsModular() const {
  if (!is_lattice_) return false;
  for (int x = 0; x < size_; ++x) {
    for (int y = x + 1; y < size_; ++y) {
      if (height_[x] + height_[y] !=
          height_[JoinIndex(x, y)] + height_[MeetIndex(x, y)]) {
        return false;
      }
    }
  }
  return true;
}

bool FiniteLattice::IsDistributive() const {
  if (!is_lattice_) return false;
  for (int x = 0; x < size_; ++x) {
    for (int y = 0; y < size_; ++y) {
      const int xy = MeetIndex(x, y);
      for (int z = 0; z < size_; ++z) {
        if (JoinIndex(xy, z) !=
            MeetIndex(JoinIndex(x, z), JoinIndex(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

void FiniteLattice::Finalize(
    std::optional<std::vector<std::vector<int>>> lower_covers,
    bool verify_bounds) {
  words_ = (size_ + 63) / 64;
  down_.assign(static_cast<std::size_t>(size_) * words_, 0);
  up_.assign(static_cast<std::size_t>(size_) * words_, 0);
  for (int y = 0; y < size_; ++y) {
    for (int x = 0; x < size_; ++x) {
      if (LeqIndex(x, y)) {
        down_[static_cast<std::size_t>(y) * words_ + (x >> 6)] |=
            1ULL << (x & 63);
        up_[static_cast<std::size_t>(x) * words_ + (y >> 6)] |=
            1ULL << (y & 63);
      }
    }
  }

  for (int x = 0; x < size_; ++x) {
    if (PopCount(&up_[static_cast<std::size_t>(x) * words_], words_) ==
        size_) {
      if (bottom_ >= 0) throw UsageError("order is not antisymmetric");
      bottom_ = x;
    }
    if (PopCount(&down_[static_cast<std::size_t>(x) * words_], words_) ==
        size_) {
      top_ = x;
    }
  }
  if (bottom_ < 0) throw UsageError("order has no least element");

  if (lower_covers) {
    lower_ = std::move(*lower_covers);
  } else {
    ComputeLowerCovers();
  }
  upper_.assign(size_, {});
  for (int y = 0; y < size_; ++y) {
    for (int x : lower_[y]) upper_[x].push_back(y);
  }

  // Down-set sizes give a linear extension of the order.
  std::vector<int> order(size_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> down_size(size_);
  for (int y = 0; y < size_; ++y) {
    down_size[y] = PopCount(&down_[static_cast<std::size_t>(y) * words_],
                            words_);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down_size[a] < down_size[b]; });
  height_.assign(size_, 0);
  for (int y : order) {
    for (int x : lower_[y]) height_[y] = std::max(height_[y], height_[x] + 1);
  }

  ji_lower_cover_.assign(size_, -1);
  atoms_.clear();
  for (int x = 0; x < size_; ++x) {
    if (x != bottom_ && lower_[x].size() == 1) {
      ji_lower_cover_[x] = lower_[x][0];
      atoms_.push_back(Atom(Make(x)));
    }
  }

  is_lattice_ = verify_bounds ? VerifyBounds() : true;
}

void FiniteLattice::ComputeLowerCovers() {
  lower_.assign(size_, {});
  std::vector<int> by_size(size_);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::vector<int> down_size(size_);
  for (int y = 0; y < size_; ++y) {
    down_size[y] = PopCount(&down_[static_cast<std::size_t>(y) * words_],
                            words_);
  }
  // Largest first, so that most candidates are absorbed early.
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](int a, int b) { return down_size[a] > down_size[b]; });
  std::vector<std::uint64_t> covered(words_);
  for (int y = 0; y < size_; ++y) {
    std::fill(covered.begin(), covered.end(), 0);
    for (int x : by_size) {
      if (x == y || !DownContains(y, x)) continue;
      if ((covered[x >> 6] >> (x & 63)) & 1ULL) continue;
      lower_[y].push_back(x);
      const std::uint64_t* dx = &down_[static_cast<std::size_t>(x) * words_];
      for (int w = 0; w < words_; ++w) covered[w] |= dx[w];
    }
    std::sort(lower_[y].begin(), lower_[y].end());
  }
}

bool FiniteLattice::VerifyBounds() const {
  std::vector<std::uint64_t> common(words_);
  for (int x = 0; x < size_; ++x) {
    for (int y = x; y < size_; ++y) {
      const int j = JoinIndex(x, y);
      const int m = MeetIndex(x, y);
      if (j < 0 || m < 0) return false;
      const std::uint64_t* ux = &up_[static_cast<std::size_t>(x) * words_];
      const std::uint64_t* uy = &up_[static_cast<std::size_t>(y) * words_];
      for (int w = 0; w < words_; ++w) common[w] = ux[w] & uy[w];
      if (!((common[j >> 6] >> (j & 63)) & 1ULL)) return false;
      if (!IsSubset(common.data(), &up_[static_cast<std::size_t>(j) * words_],
                    words_)) {
        return false;
      }
      const std::uint64_t* dx = &down_[static_cast<std::size_t>(x) * words_];
      const std::uint64_t* dy = &down_[static_cast<std::size_t>(y) * words_];
      for (int w = 0; w < words_; ++w) common[w] = dx[w] & dy[w];
      if (!((common[m >> 6] >> (m & 63)) & 1ULL)) return false;
      if (!IsSubset(common.data(),
                    &down_[static_cast<std::size_t>(m) * words_], words_)) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

SetLattice::SetLattice(int ground_set_size, std::vector<std::string> labels)
    : FiniteLattice(ground_set_size >= 0 && ground_set_size <= kMaxGroundSet
                        ? (1 << ground_set_size)
                        : throw ResourceError(
                              "set lattice ground set size must be in [0, " +
                              std::to_string(kMaxGroundSet) + "]")),
      n_(ground_set_size),
      labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i + 1));
  }
  if (static_cast<int>(labels_.size()) != n_) {
    throw UsageError("set lattice label count does not match ground set");
  }
  std::vector<std::vector<int>> covers(size());
  for (int mask = 0; mask < size(); ++mask) {
    for (int i = 0; i < n_; ++i) {
      if (mask & (1 << i)) covers[mask].push_back(mask & ~(1 << i));
    }
    std::sort(covers[mask].begin(), covers[mask].end());
  }
  Finalize(std::move(covers), /*verify_bounds=*/false);
}

std::string SetLattice::Label(ElementId x) const {
  CheckOwned(x);
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if (x.index() & (1 << i)) {
      if (!first) out += ",";
      out += labels_[i];
      first = false;
    }
  }
  return out + "}";
}

ElementId SetLattice::FromMask(std::uint32_t mask) const {
  if (mask >= static_cast<std::uint32_t>(size())) {
    throw UsageError("mask outside the ground set");
  }
  return Make(static_cast<int>(mask));
}

std::uint32_t SetLattice::Mask(ElementId x) const {
  CheckOwned(x);
  return static_cast<std::uint32_t>(x.index());
}

Atom SetLattice::Singleton(int item) const {
  if (item < 0 || item >= n_) throw UsageError("item outside the ground set");
  return AsAtom(Make(1 << item));
}

// ---------------------------------------------------------------------------

TableLattice::TableLattice(int size, const std::function<bool(int, int)>& leq,
                           std::vector<std::string> labels)
    : FiniteLattice(size),
      n_(size),
      leq_(static_cast<std::size_t>(size) * size),
      join_(static_cast<std::size_t>(size) * size, -1),
      meet_(static_cast<std::size_t>(size) * size, -1),
      labels_(std::move(labels)) {
  if (size > kMaxElements) {
    throw ResourceError("table lattice limited to " +
                        std::to_string(kMaxElements) + " elements");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      leq_[static_cast<std::size_t>(i) * n_ + j] = leq(i, j) ? 1 : 0;
    }
  }
  for (int i = 0; i < n_; ++i) {
    if (!LeqIndex(i, i)) throw UsageError("order must be reflexive");
    for (int j = 0; j < n_; ++j) {
      if (i != j && LeqIndex(i, j) && LeqIndex(j, i)) {
        throw UsageError("order must be antisymmetric");
      }
      for (int k = 0; k < n_; ++k) {
        if (LeqIndex(i, j) && LeqIndex(j, k) && !LeqIndex(i, k)) {
          throw UsageError("order must be transitive");
        }
      }
    }
  }
  // Least upper bound: the upper bound lying below every other upper bound.
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int z = 0; z < n_ && join_[i * n_ + j] < 0; ++z) {
        if (!LeqIndex(i, z) || !LeqIndex(j, z)) continue;
        bool least = true;
        for (int w = 0; w < n_ && least; ++w) {
          if (LeqIndex(i, w) && LeqIndex(j, w) && !LeqIndex(z, w)) {
            least = false;
          }
        }
        if (least) join_[i * n_ + j] = z;
      }
      for (int z = 0; z < n_ && meet_[i * n_ + j] < 0; ++z) {
        if (!LeqIndex(z, i) || !LeqIndex(z, j)) continue;
        bool greatest = true;
        for (int w = 0; w < n_ && greatest; ++w) {
          if (LeqIndex(w, i) && LeqIndex(w, j) && !LeqIndex(w, z)) {
            greatest = false;
          }
        }
        if (greatest) meet_[i * n_ + j] = z;
      }
    }
  }
  if (labels_.empty()) {
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  }
  Finalize(std::nullopt, /*verify_bounds=*/true);
}

std::unique_ptr<TableLattice> TableLattice::FromCovers(
    int size, const std::vector<std::pair<int, int>>& covers,
    std::vector<std::string> labels) {
  std::vector<char> reach(static_cast<std::size_t>(size) * size, 0);
  for (int i = 0; i < size; ++i) reach[i * size + i] = 1;
  for (const auto& [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= size || hi >= size) {
      throw UsageError("cover pair references unknown element");
    }
    reach[lo * size + hi] = 1;
  }
  for (int k = 0; k < size; ++k) {
    for (int i = 0; i < size; ++i) {
      if (!reach[i * size + k]) continue;
      for (int j = 0; j < size; ++j) {
        if (reach[k * size + j]) reach[i * size + j] = 1;
      }
    }
  }
  return std::make_unique<TableLattice>(
      size, [&](int i, int j) { return reach[i * size + j] != 0; },
      std::move(labels));
}

std::unique_ptr<TableLattice> TableLattice::Chain(int length) {
  return std::make_unique<TableLattice>(length + 1,
                                        [](int i, int j) { return i <= j; });
}

std::unique_ptr<TableLattice> TableLattice::Diamond() {
  return FromCovers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                    {"bot", "a", "b", "c", "top"});
}

std::string TableLattice::Label(ElementId x) const {
  CheckOwned(x);
  return labels_[x.index()];
}

}  // namespace dirsub
