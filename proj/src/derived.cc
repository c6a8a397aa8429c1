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

#include "matroid/derived.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "matroid/errors.h"

namespace matroid {
namespace {

void GuardSize(Subset domain, int max_elements, const char* what) {
  if (domain.size() > max_elements) {
    throw ResourceGuardError(std::string(what) + " refused: " +
                             std::to_string(domain.size()) +
                             " elements exceed the limit of " +
                             std::to_string(max_elements) +
                             " (raise it with --max-n)");
  }
}

}  // namespace

Subset GreedyBasisOf(Oracle& oracle, Subset x) {
  Subset basis;
  for (int e : x) {
    if (oracle.SubmitSingle(basis.With(e))) basis.Insert(e);
  }
  return basis;
}

int Rank(Oracle& oracle, Subset x) { return GreedyBasisOf(oracle, x).size(); }

Subset Closure(Oracle& oracle, Subset x) {
  const Subset basis = GreedyBasisOf(oracle, x);
  const std::vector<int> outside = (oracle.domain() - x).Indices();
  if (outside.empty()) return x;
  std::vector<Subset> batch;
  for (int y : outside) batch.push_back(basis.With(y));
  std::vector<bool> answers = oracle.SubmitRound(batch);
  Subset closure = x;
  for (size_t i = 0; i < outside.size(); ++i) {
    if (!answers[i]) closure.Insert(outside[i]);
  }
  return closure;
}

Subset Continuations(Oracle& oracle, Subset x) {
  return oracle.domain() - Closure(oracle, x);
}

Circuit FundamentalCircuit(Oracle& oracle, Subset x, int y) {
  if (x.contains(y) || !oracle.domain().contains(y)) {
    throw DomainError("fundamental circuit needs y in the domain and not in X");
  }
  std::vector<bool> check = oracle.SubmitRound({x, x.With(y)});
  if (!check[0]) throw DomainError("fundamental circuit needs X independent");
  if (check[1]) {
    throw DomainError("fundamental circuit needs X + y dependent");
  }
  Subset circuit = Subset::Singleton(y);
  const std::vector<int> members = x.Indices();
  if (!members.empty()) {
    std::vector<Subset> batch;
    for (int e : members) batch.push_back(x.Without(e).With(y));
    std::vector<bool> answers = oracle.SubmitRound(batch);
    for (size_t i = 0; i < members.size(); ++i) {
      if (answers[i]) circuit.Insert(members[i]);
    }
  }
  // Minimality: dropping any element must leave an independent set.
  if (circuit.size() > 1) {
    std::vector<Subset> batch;
    for (int e : circuit) batch.push_back(circuit.Without(e));
    for (bool independent : oracle.SubmitRound(batch)) {
      if (!independent) {
        throw FaultyOracleError("fundamental circuit is not minimal");
      }
    }
  }
  return {circuit};
}

std::vector<Circuit> EnumerateCircuits(Oracle& oracle, int max_elements) {
  const Subset domain = oracle.domain();
  GuardSize(domain, max_elements, "circuit enumeration");
  std::vector<std::vector<Subset>> by_size(domain.size() + 1);
  ForEachSubsetOf(domain, [&](Subset s) { by_size[s.size()].push_back(s); });

  std::vector<Circuit> circuits;
  for (int k = 1; k <= domain.size(); ++k) {
    std::vector<Subset> candidates;
    for (Subset s : by_size[k]) {
      bool contains_circuit = std::any_of(
          circuits.begin(), circuits.end(),
          [s](const Circuit& c) { return c.elements.IsSubsetOf(s); });
      if (!contains_circuit) candidates.push_back(s);
    }
    if (candidates.empty()) continue;
    std::vector<bool> answers = oracle.SubmitRound(candidates);
    // Every proper subset of a candidate is free of circuits, hence
    // independent, so a dependent candidate is itself a circuit.
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (!answers[i]) circuits.push_back({candidates[i]});
    }
  }
  std::sort(circuits.begin(), circuits.end(),
            [](const Circuit& a, const Circuit& b) {
              return CanonicalLess(a.elements, b.elements);
            });
  return circuits;
}

std::vector<Cocircuit> EnumerateCocircuits(Oracle& oracle, int max_elements) {
  return CocircuitsOf(IndependenceTable(oracle, max_elements));
}

std::vector<Circuit> CircuitsOf(const IndependenceTable& table) {
  std::vector<Circuit> circuits;
  ForEachSubsetOf(table.domain(), [&](Subset s) {
    if (s.empty() || table.independent(s)) return;
    for (int e : s) {
      if (!table.independent(s.Without(e))) return;
    }
    circuits.push_back({s});
  });
  std::sort(circuits.begin(), circuits.end(),
            [](const Circuit& a, const Circuit& b) {
              return CanonicalLess(a.elements, b.elements);
            });
  return circuits;
}

std::vector<Cocircuit> CocircuitsOf(const IndependenceTable& table) {
  const Subset domain = table.domain();
  const int rank = table.Rank(domain);
  std::set<Subset> hyperplanes;
  if (rank > 0) {
    ForEachSubsetOf(domain, [&](Subset s) {
      if (s.size() == rank - 1 && table.independent(s)) {
        hyperplanes.insert(table.Closure(s));
      }
    });
  }
  std::vector<Cocircuit> out;
  for (Subset h : hyperplanes) out.push_back({domain - h, h});
  std::sort(out.begin(), out.end(), [](const Cocircuit& a, const Cocircuit& b) {
    return CanonicalLess(a.elements, b.elements);
  });
  return out;
}

bool ModularPair(Oracle& oracle, Subset x, Subset y) {
  return Rank(oracle, x & y) + Rank(oracle, x | y) ==
         Rank(oracle, x) + Rank(oracle, y);
}

int DualRank(Oracle& oracle, Subset x) {
  const Subset domain = oracle.domain();
  return Rank(oracle, domain - x) + x.size() - Rank(oracle, domain);
}

IndependenceTable::IndependenceTable(Oracle& oracle, int max_elements) {
  domain_ = oracle.domain();
  GuardSize(domain_, max_elements, "independence table");
  std::vector<Subset> all;
  all.reserve(size_t{1} << domain_.size());
  ForEachSubsetOf(domain_, [&](Subset s) { all.push_back(s); });
  Allocate();
  std::vector<bool> answers = oracle.SubmitRound(all);
  for (size_t i = 0; i < all.size(); ++i) {
    table_[Compress(all[i])] = answers[i];
  }
}

IndependenceTable IndependenceTable::Probed(const Oracle& oracle,
                                            int max_elements) {
  return FromPredicate(oracle.domain(), max_elements,
                       [&oracle](Subset s) { return oracle.Probe(s); });
}

IndependenceTable IndependenceTable::FromPredicate(
    Subset domain, int max_elements,
    const std::function<bool(Subset)>& independent) {
  IndependenceTable t;
  t.domain_ = domain;
  GuardSize(domain, max_elements, "independence table");
  t.Allocate();
  ForEachSubsetOf(domain, [&](Subset s) {
    t.table_[t.Compress(s)] = independent(s);
  });
  return t;
}

void IndependenceTable::Allocate() {
  positions_ = domain_.Indices();
  slot_.assign(kMaxElements, -1);
  for (size_t k = 0; k < positions_.size(); ++k) {
    slot_[positions_[k]] = static_cast<int>(k);
  }
  table_.assign(size_t{1} << positions_.size(), false);
}

uint64_t IndependenceTable::Compress(Subset s) const {
  uint64_t key = 0;
  for (int e : s) key |= uint64_t{1} << slot_[e];
  return key;
}

Subset IndependenceTable::BasisOf(Subset s) const {
  Subset basis;
  for (int e : s) {
    if (independent(basis.With(e))) basis.Insert(e);
  }
  return basis;
}

Subset IndependenceTable::Closure(Subset s) const {
  const Subset basis = BasisOf(s);
  Subset closure = s;
  for (int y : domain_ - s) {
    if (!independent(basis.With(y))) closure.Insert(y);
  }
  return closure;
}

}  // namespace matroid
