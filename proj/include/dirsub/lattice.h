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

// Finite lattices with precomputed order structure.
//
// A FiniteLattice owns its elements; callers hold ElementId handles that are
// only meaningful for the lattice that issued them. Join-irreducible elements
// are handed out as Atom, a separate handle type, so that "an element" and
// "a unit step" cannot be confused. Every query is const and the object is
// immutable once constructed.

#ifndef DIRSUB_LATTICE_H_
#define DIRSUB_LATTICE_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dirsub {

class FiniteLattice;

class ElementId {
 public:
  ElementId() = default;

  int index() const { return index_; }
  std::uint32_t lattice_tag() const { return lattice_; }
  bool valid() const { return index_ >= 0; }

  friend bool operator==(const ElementId&, const ElementId&) = default;
  friend auto operator<=>(const ElementId& a, const ElementId& b) {
    return std::pair(a.lattice_, a.index_) <=> std::pair(b.lattice_, b.index_);
  }

 private:
  friend class FiniteLattice;
  ElementId(std::uint32_t lattice, std::int32_t index)
      : lattice_(lattice), index_(index) {}

  std::uint32_t lattice_ = 0;
  std::int32_t index_ = -1;
};

// A join-irreducible element. Obtain one from FiniteLattice::AsAtom or
// JoinIrreducibles(); use element() for the explicit conversion back.
class Atom {
 public:
  ElementId element() const { return element_; }
  int index() const { return element_.index(); }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  friend class FiniteLattice;
  explicit Atom(ElementId e) : element_(e) {}

  ElementId element_;
};

// adm(X) for one base element.
struct AdmissibleSet {
  ElementId base;
  std::vector<Atom> atoms;
};

class FiniteLattice {
 public:
  virtual ~FiniteLattice() = default;
  FiniteLattice(const FiniteLattice&) = delete;
  FiniteLattice& operator=(const FiniteLattice&) = delete;

  // "set", "dictionary", "table".
  virtual std::string kind() const = 0;
  // Human-readable name of an element for dumps and diagnostics.
  virtual std::string Label(ElementId x) const;

  int size() const { return size_; }
  std::uint32_t tag() const { return tag_; }

  ElementId Element(int index) const;
  std::vector<ElementId> Elements() const;
  ElementId Bottom() const { return Make(bottom_); }
  // Throws UsageError when the order has no greatest element.
  ElementId Top() const;
  bool has_top() const { return top_ >= 0; }

  bool Leq(ElementId x, ElementId y) const;
  bool Less(ElementId x, ElementId y) const { return x != y && Leq(x, y); }
  ElementId Join(ElementId x, ElementId y) const;
  ElementId Join(ElementId x, Atom a) const { return Join(x, a.element()); }
  ElementId Meet(ElementId x, ElementId y) const;

  // Length of the longest composition series from the bottom to x.
  int Height(ElementId x) const;
  int height() const;

  const std::vector<Atom>& JoinIrreducibles() const { return atoms_; }
  bool IsJoinIrreducible(ElementId x) const;
  // Throws UsageError if x is not join-irreducible.
  Atom AsAtom(ElementId x) const;
  // The unique element covered by a.
  ElementId LowerCoverOf(Atom a) const;

  bool IsAdmissible(Atom a, ElementId x) const;
  // Checked form for callers holding a plain element.
  bool IsAdmissible(ElementId a, ElementId x) const;
  AdmissibleSet Admissible(ElementId x) const;
  // cl(a | x): admissible atoms giving the same join with x as a.
  std::vector<Atom> Closure(Atom a, ElementId x) const;

  // max over X and a in adm(X) of h(X v a) - h(X).
  int Incrementality() const;

  std::vector<ElementId> LowerCovers(ElementId x) const;
  std::vector<ElementId> UpperCovers(ElementId x) const;
  // (lower, upper) index pairs of the Hasse diagram.
  std::vector<std::pair<int, int>> HasseEdges() const;

  // False when some pair lacks a unique least upper or greatest lower bound.
  bool is_lattice() const { return is_lattice_; }
  bool IsModular() const;
  virtual bool IsDistributive() const;

 protected:
  explicit FiniteLattice(int size);

  // Builds order bitsets, covers, heights and join-irreducibles. Derived
  // constructors call this once their Leq/Join/Meet are usable. Supplying
  // lower covers skips the generic cover computation; verify_bounds checks
  // every join and meet against the order relation.
  void Finalize(std::optional<std::vector<std::vector<int>>> lower_covers,
                bool verify_bounds);

  virtual bool LeqIndex(int x, int y) const = 0;
  // -1 if the pair has no least upper (greatest lower) bound.
  virtual int JoinIndex(int x, int y) const = 0;
  virtual int MeetIndex(int x, int y) const = 0;

  ElementId Make(int index) const { return ElementId(tag_, index); }
  void CheckOwned(ElementId x) const;
  bool DownContains(int y, int x) const {
    return (down_[static_cast<std::size_t>(y) * words_ + (x >> 6)] >>
            (x & 63)) & 1ULL;
  }

 private:
  void ComputeLowerCovers();
  bool VerifyBounds() const;

  std::uint32_t tag_;
  int size_;
  int words_ = 0;
  int bottom_ = -1;
  int top_ = -1;
  bool is_lattice_ = true;
  std::vector<std::uint64_t> down_;  // row y: bitset of {x : x <= y}
  std::vector<std::uint64_t> up_;    // row x: bitset of {y : x <= y}
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
  std::vector<int> height_;
  std::vector<int> ji_lower_cover_;  // -1 for non join-irreducibles
  std::vector<Atom> atoms_;
};

// The Boolean lattice 2^V on a ground set of n items; element index is the
// subset bitmask.
class SetLattice : public FiniteLattice {
 public:
  static constexpr int kMaxGroundSet = 12;

  explicit SetLattice(int ground_set_size,
                      std::vector<std::string> labels = {});

  std::string kind() const override { return "set"; }
  std::string Label(ElementId x) const override;
  bool IsDistributive() const override { return true; }

  int ground_set_size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  ElementId FromMask(std::uint32_t mask) const;
  std::uint32_t Mask(ElementId x) const;
  // The singleton {item} as an atom.
  Atom Singleton(int item) const;

 protected:
  bool LeqIndex(int x, int y) const override { return (x & ~y) == 0; }
  int JoinIndex(int x, int y) const override { return x | y; }
  int MeetIndex(int x, int y) const override { return x & y; }

 private:
  int n_;
  std::vector<std::string> labels_;
};

// A lattice given by an explicit order relation; join and meet tables are
// derived from it. Intended for small hand-built lattices (chains, M3, the
// admissibility and closure patterns).
class TableLattice : public FiniteLattice {
 public:
  static constexpr int kMaxElements = 512;

  // leq(i, j) must be a partial order with a least element.
  TableLattice(int size, const std::function<bool(int, int)>& leq,
               std::vector<std::string> labels = {});
  // Builds from covering pairs (lower, upper); the order is their
  // reflexive-transitive closure.
  static std::unique_ptr<TableLattice> FromCovers(
      int size, const std::vector<std::pair<int, int>>& covers,
      std::vector<std::string> labels = {});
  // 0 < 1 < ... < length.
  static std::unique_ptr<TableLattice> Chain(int length);
  // The diamond M3: bottom, three pairwise incomparable atoms, top.
  static std::unique_ptr<TableLattice> Diamond();

  std::string kind() const override { return "table"; }
  std::string Label(ElementId x) const override;

 protected:
  bool LeqIndex(int x, int y) const override {
    return leq_[static_cast<std::size_t>(x) * n_ + y] != 0;
  }
  int JoinIndex(int x, int y) const override {
    return join_[static_cast<std::size_t>(x) * n_ + y];
  }
  int MeetIndex(int x, int y) const override {
    return meet_[static_cast<std::size_t>(x) * n_ + y];
  }

 private:
  int n_;
  std::vector<char> leq_;
  std::vector<int> join_;
  std::vector<int> meet_;
  std::vector<std::string> labels_;
};

}  // namespace dirsub

#endif  // DIRSUB_LATTICE_H_
