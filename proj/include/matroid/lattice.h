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

#ifndef MATROID_LATTICE_H_
#define MATROID_LATTICE_H_

#include <optional>
#include <ostream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroid/derived.h"
#include "matroid/ground_set.h"
#include "matroid/oracle.h"
#include "matroid/subset.h"

namespace matroid {

// The flats of a small matroid ordered by inclusion. Flats are referred to
// by position in flats(), which is sorted by rank and then canonically.
class FlatLattice {
 public:
  // All closures of independent sets. One round (the independence table).
  static FlatLattice Build(Oracle& oracle,
                           int max_elements = kMaxLatticeElements);
  // Same, through Oracle::Probe; no ledger charges.
  static FlatLattice BuildProbed(const Oracle& oracle,
                                 int max_elements = kMaxLatticeElements);
  // Closures of the independent sets recorded in `table`.
  static FlatLattice FromTable(IndependenceTable table);
  // An explicit family closed under intersection and containing `top`.
  // Ranks are heights. Intended for hand-built fixtures.
  static FlatLattice FromFamily(std::vector<Subset> family, Subset top);

  int size() const { return static_cast<int>(flats_.size()); }
  const std::vector<Subset>& flats() const { return flats_; }
  Subset flat(int id) const { return flats_.at(id); }
  int rank_of(int id) const { return rank_.at(id); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  int height() const { return rank_of(top()); }
  std::optional<int> Find(Subset s) const;

  // Flats covering `id`, and flats covered by it.
  const std::vector<int>& upper_covers(int id) const { return up_.at(id); }
  const std::vector<int>& lower_covers(int id) const { return down_.at(id); }
  bool Covers(int upper, int lower) const;

  int Meet(int a, int b) const;
  int Join(int a, int b) const;
  bool Leq(int a, int b) const { return flat(a).IsSubsetOf(flat(b)); }

  std::vector<int> Atoms() const { return upper_covers(bottom()); }
  std::vector<int> Coatoms() const { return lower_covers(top()); }
  std::vector<int> OfRank(int r) const;

 private:
  FlatLattice() = default;
  void Index();
  void ComputeCovers(bool graded);

  std::vector<Subset> flats_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::unordered_map<Subset, int, SubsetHash> id_;
  // Present for lattices built from an oracle; joins become table lookups.
  std::optional<IndependenceTable> table_;
};

// A subset of flats closed under meet and join, with its generators.
struct Sublattice {
  std::vector<int> members;  // sorted flat ids
  std::vector<int> generators;
};

bool IsGeometric(const FlatLattice& lattice);

Sublattice SublatticeGenerated(const FlatLattice& lattice,
                               const std::vector<int>& generators);

// Whether `sub` is isomorphic to the powerset of its atoms.
bool IsBooleanAlgebra(const FlatLattice& lattice, const Sublattice& sub);

// Whether the hyperplanes are the coatoms of a Boolean sublattice. The top
// flat is included among the generators. Throws DomainError when an input is
// not a hyperplane.
bool IsCofree(const FlatLattice& lattice, const std::vector<int>& hyperplanes);

// [closure(meet u (B - x)) for x in B], B in increasing index order. Throws
// DomainError unless B is a basis of the contraction by `meet`. When a
// lattice is given, also checks that the result is cofree and that each x
// lies outside exactly its own hyperplane.
std::vector<Subset> BasisGeneratedHyperplanes(
    Oracle& oracle, Subset basis, Subset meet,
    const FlatLattice* lattice = nullptr);

// An interval [F, G] of height two holding at least six flats.
struct FlatInterval {
  int lower = 0;
  int upper = 0;
  int size = 0;  // flats in the closed interval
};

// Colines below the top are scanned first, then every other interval.
std::optional<FlatInterval> FindU42Interval(const FlatLattice& lattice);

// Hasse diagram, nodes labeled with element names.
void WriteDot(const FlatLattice& lattice, const GroundSet& ground,
              std::ostream& out);

}  // namespace matroid

#endif  // MATROID_LATTICE_H_
