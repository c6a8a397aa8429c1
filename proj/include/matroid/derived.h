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

#ifndef MATROID_DERIVED_H_
#define MATROID_DERIVED_H_

#include <functional>
#include <vector>

#include "matroid/oracle.h"
#include "matroid/subset.h"

namespace matroid {

// Enumeration refuses ground sets larger than these unless overridden.
inline constexpr int kMaxCircuitElements = 14;
inline constexpr int kMaxLatticeElements = 12;

struct Circuit {
  Subset elements;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct Cocircuit {
  Subset elements;
  // The hyperplane H with elements = domain - H.
  Subset hyperplane;

  friend bool operator==(const Cocircuit&, const Cocircuit&) = default;
};

// These helpers scan one element per round. Algorithms with round
// guarantees batch their own queries instead of calling them.

int Rank(Oracle& oracle, Subset x);
// A maximal independent subset of x, chosen greedily in index order.
Subset GreedyBasisOf(Oracle& oracle, Subset x);
Subset Closure(Oracle& oracle, Subset x);
Subset Continuations(Oracle& oracle, Subset x);

// The unique circuit inside X + y. Throws DomainError unless X is
// independent and X + y is dependent.
Circuit FundamentalCircuit(Oracle& oracle, Subset x, int y);

// All circuits, ordered by size then lexicographically. One round per
// cardinality level. Throws ResourceGuardError when the domain exceeds
// `max_elements`.
std::vector<Circuit> EnumerateCircuits(Oracle& oracle,
                                       int max_elements = kMaxCircuitElements);

// One cocircuit per hyperplane, in canonical order of the cocircuit.
std::vector<Cocircuit> EnumerateCocircuits(
    Oracle& oracle, int max_elements = kMaxLatticeElements);

bool ModularPair(Oracle& oracle, Subset x, Subset y);

// rank*(X) = rank(E - X) + |X| - rank(E).
int DualRank(Oracle& oracle, Subset x);

// Independence of every subset of the domain, answered in a single round.
class IndependenceTable {
 public:
  // Throws ResourceGuardError when the domain exceeds `max_elements`.
  IndependenceTable(Oracle& oracle, int max_elements);
  // Unmetered variant built from Oracle::Probe.
  static IndependenceTable Probed(const Oracle& oracle, int max_elements);
  static IndependenceTable FromPredicate(
      Subset domain, int max_elements,
      const std::function<bool(Subset)>& independent);

  Subset domain() const { return domain_; }
  bool independent(Subset s) const { return table_[Compress(s)]; }
  // Greedy basis of `s` in index order.
  Subset BasisOf(Subset s) const;
  int Rank(Subset s) const { return BasisOf(s).size(); }
  Subset Closure(Subset s) const;

 private:
  IndependenceTable() = default;
  void Allocate();
  uint64_t Compress(Subset s) const;

  Subset domain_;
  std::vector<int> positions_;  // domain index -> element
  std::vector<int> slot_;       // element -> compressed bit, or -1
  std::vector<bool> table_;
};

// Circuits and cocircuits read off a complete table, in canonical order.
std::vector<Circuit> CircuitsOf(const IndependenceTable& table);
std::vector<Cocircuit> CocircuitsOf(const IndependenceTable& table);

}  // namespace matroid

#endif  // MATROID_DERIVED_H_
