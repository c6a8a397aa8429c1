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

#include "matroid/algorithms.h"

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "matroid/errors.h"
#include "matroid/views.h"

namespace matroid {
namespace {

// Ledger totals at the start of a run, so reports show only the run's cost.
class LedgerMark {
 public:
  explicit LedgerMark(const Oracle& oracle)
      : oracle_(oracle), start_(oracle.ledger()) {}

  void Fill(RunReport& report) const {
    const QueryLedger& now = oracle_.ledger();
    report.rounds = now.rounds - start_.rounds;
    report.queries = now.queries - start_.queries;
    report.basis_calls = now.basis_calls - start_.basis_calls;
  }

 private:
  const Oracle& oracle_;
  QueryLedger start_;
};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

RunReport Greedy(Oracle& oracle, const WeightMap& w) {
  LedgerMark mark(oracle);
  RunReport report;
  report.algorithm = "greedy";
  for (int x : w.Sorted(oracle.domain())) {
    if (oracle.SubmitSingle(report.solution.With(x))) {
      report.solution.Insert(x);
    }
  }
  mark.Fill(report);
  report.total_weight = w.Total(report.solution);
  return report;
}

RunReport Boruvka(const GraphRep& g, const WeightMap& w) {
  RunReport report;
  report.algorithm = "boruvka";
  DisjointSets components(g.vertex_count);
  const int m = static_cast<int>(g.edges.size());
  while (true) {
    // Lightest edge leaving each component.
    std::vector<int> best(g.vertex_count, -1);
    for (int e = 0; e < m; ++e) {
      const int cu = components.Find(g.edges[e].u);
      const int cv = components.Find(g.edges[e].v);
      if (cu == cv) continue;
      for (int c : {cu, cv}) {
        if (best[c] < 0 || w.Less(e, best[c])) best[c] = e;
      }
    }
    Subset selected;
    for (int e : best) {
      if (e >= 0) selected.Insert(e);
    }
    if (selected.empty()) break;
    ++report.rounds;
    for (int e : selected) {
      if (components.Union(g.edges[e].u, g.edges[e].v)) {
        report.solution.Insert(e);
      }
    }
  }
  report.outer_iterations = static_cast<int>(report.rounds);
  report.total_weight = w.Total(report.solution);
  return report;
}

std::vector<Subset> KuwBlocks(Subset domain) {
  const int n = domain.size();
  if (n == 0) return {};
  int k = 1;
  while (k * k < n) ++k;
  const int base = n / k;
  const int extra = n % k;
  std::vector<Subset> blocks(k);
  std::vector<int> elements = domain.Indices();
  size_t next = 0;
  for (int b = 0; b < k; ++b) {
    const int size = base + (b < extra ? 1 : 0);
    for (int j = 0; j < size; ++j) blocks[b].Insert(elements[next++]);
  }
  return blocks;
}

Subset KuwBasisSearch(Oracle& oracle, const KuwOptions& options) {
  const Subset domain = oracle.domain();
  std::vector<Subset> blocks = KuwBlocks(domain);
  const int full_rank =
      options.check_invariant ? oracle.ProbeRank(domain) : 0;
  Subset partial;
  while (true) {
    std::vector<int> open;
    Subset remaining;
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (!blocks[i].empty()) {
        open.push_back(static_cast<int>(i));
        remaining |= blocks[i];
      }
    }
    if (options.check_invariant &&
        oracle.ProbeRank(partial | remaining) != full_rank) {
      throw FaultyOracleError("block search lost the spanning invariant");
    }
    if (options.trace != nullptr) {
      options.trace->push_back({partial, remaining, false});
    }
    if (open.empty()) break;

    // Try to absorb a whole block.
    std::vector<Subset> unions;
    for (int i : open) unions.push_back(partial | blocks[i]);
    std::vector<bool> absorbable = oracle.SubmitRound(unions);
    bool augmented = false;
    for (size_t q = 0; q < open.size(); ++q) {
      if (absorbable[q]) {
        partial |= blocks[open[q]];
        blocks[open[q]] = Subset();
        augmented = true;
        break;
      }
    }
    if (augmented) {
      if (options.trace != nullptr) options.trace->back().augmented = true;
      continue;
    }

    // Otherwise drop, from every block, the element closing its first
    // dependent prefix.
    std::vector<Subset> prefixes;
    std::vector<std::vector<int>> members;
    for (int i : open) {
      members.push_back(blocks[i].Indices());
      Subset prefix = partial;
      for (int z : members.back()) {
        prefix.Insert(z);
        prefixes.push_back(prefix);
      }
    }
    std::vector<bool> answers = oracle.SubmitRound(prefixes);
    size_t offset = 0;
    for (size_t q = 0; q < open.size(); ++q) {
      const std::vector<int>& zs = members[q];
      for (size_t j = 0; j < zs.size(); ++j) {
        if (!answers[offset + j]) {
          blocks[open[q]].Erase(zs[j]);
          break;
        }
      }
      offset += zs.size();
    }
  }
  return partial;
}

RunReport ReductionOptimize(Oracle& oracle, const WeightMap& w,
                            const BasisSearchFn& search,
                            const ReductionOptions& options) {
  LedgerMark mark(oracle);
  RunReport report;
  report.algorithm = "reduction";
  Subset solution;
  while (true) {
    ContractView view(oracle, solution);
    const Subset basis = search(view);
    ++oracle.ledger().basis_calls;
    if (options.check_results &&
        (!basis.IsSubsetOf(view.domain()) || !view.Probe(basis) ||
         view.ProbeRank(view.domain()) != basis.size())) {
      throw FaultyOracleError("basis search returned " +
                              oracle.ground().Format(basis) +
                              ", which is not a basis of the contraction");
    }
    if (basis.empty()) {
      if (options.confirm_termination && !view.domain().empty()) {
        std::vector<Subset> singles;
        for (int y : view.domain()) singles.push_back(Subset::Singleton(y));
        for (bool independent : view.SubmitRound(singles)) {
          if (independent) {
            throw FaultyOracleError(
                "basis search returned the empty set on a nonzero rank");
          }
        }
      }
      break;
    }

    // One round for every cocircuit Γ(B - x_i) of the contraction.
    const std::vector<int> points = basis.Indices();
    std::vector<Subset> batch;
    std::vector<std::pair<size_t, int>> owner;  // (cocircuit, element)
    for (size_t i = 0; i < points.size(); ++i) {
      const Subset rest = basis.Without(points[i]);
      for (int y : view.domain() - rest) {
        batch.push_back(rest.With(y));
        owner.emplace_back(i, y);
      }
    }
    std::vector<bool> answers = view.SubmitRound(batch);
    std::vector<Subset> cocircuits(points.size());
    for (size_t q = 0; q < batch.size(); ++q) {
      if (answers[q]) cocircuits[owner[q].first].Insert(owner[q].second);
    }

    // Cocircuit minima, grouped by the point they collide on.
    std::map<int, std::vector<size_t>> collisions;
    IterationRecord record;
    record.basis = basis;
    record.contraction_rank = basis.size();
    for (size_t i = 0; i < cocircuits.size(); ++i) {
      const int z = ArgminWeight(cocircuits[i], w);
      collisions[z].push_back(i);
      record.direct.Insert(z);
    }
    for (const auto& [z, group] : collisions) {
      for (size_t a = 0; a < group.size(); ++a) {
        for (size_t b = a + 1; b < group.size(); ++b) {
          const Subset difference = cocircuits[group[a]] ^ cocircuits[group[b]];
          if (!difference.empty()) {
            record.symmetric.Insert(ArgminWeight(difference, w));
          }
        }
      }
    }
    solution |= record.direct | record.symmetric;
    record.rounds_after = oracle.ledger().rounds;
    report.per_iteration.push_back(record);
    ++report.outer_iterations;
  }
  report.solution = solution;
  report.total_weight = w.Total(solution);
  mark.Fill(report);
  return report;
}

RunReport OptimizeBinary(Oracle& oracle, const WeightMap& w) {
  ReductionOptions options;
  // The block search only returns the empty set when the rank is zero.
  options.confirm_termination = false;
  RunReport report = ReductionOptimize(
      oracle, w, [](Oracle& view) { return KuwBasisSearch(view); }, options);
  report.algorithm = "reduction-kuw";
  return report;
}

}  // namespace matroid
