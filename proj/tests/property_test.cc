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

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "brute_oracles.h"
#include "gtest/gtest.h"
#include "matroid/algorithms.h"
#include "matroid/derived.h"
#include "matroid/fixtures.h"
#include "matroid/lattice.h"
#include "matroid/representations.h"
#include "matroid/verify.h"
#include "matroid/views.h"

namespace matroid {
namespace {

struct Sample {
  GroundSet ground;
  BinaryRep rep;
};

// Random binary matroids with 1..rows_max rows and 2..cols_max columns.
std::vector<Sample> RandomSamples(uint64_t seed, int count, int rows_max,
                                  int cols_max) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  for (int i = 0; i < count; ++i) {
    const int rows = 1 + static_cast<int>(rng() % rows_max);
    const int cols = 2 + static_cast<int>(rng() % (cols_max - 1));
    out.push_back({GroundSet::Numbered(cols),
                   testing::RandomBinary(rng, rows, cols)});
  }
  return out;
}

Subset RandomSubset(std::mt19937_64& rng, Subset domain) {
  return Subset(rng() & domain.bits());
}

TEST(PropertyTest, AxiomsHoldForEveryBackend) {
  for (const Sample& s : RandomSamples(1, 20, 6, 12)) {
    OracleSession session = MakeSession(s.ground, s.rep);
    EXPECT_TRUE(verify::CheckAxioms(session).ok);
  }
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    OracleSession g = MakeSession(testing::RandomGraph(rng, 6, 10));
    EXPECT_TRUE(verify::CheckAxioms(g).ok);
  }
  for (int n = 0; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      OracleSession u = MakeUniformSession(n, r);
      EXPECT_TRUE(verify::CheckAxioms(u).ok);
    }
  }
}

TEST(PropertyTest, GraphicToBinaryMatchesAcyclicity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int v = 1 + trial % 7;
    const int e = 1 + static_cast<int>(rng() % 10);
    const GraphRep g = testing::RandomGraph(rng, v, e);
    const BinaryRep rep = GraphicToBinary(g);
    for (uint64_t bits = 0; bits < (uint64_t{1} << e); ++bits) {
      ASSERT_EQ(rep.IsIndependent(Subset(bits)),
                testing::EdgesAcyclic(g, Subset(bits)));
    }
  }
}

TEST(PropertyTest, ContractionIsAPrincipalFilter) {
  std::mt19937_64 rng(4);
  for (const Sample& s : RandomSamples(4, 20, 5, 9)) {
    OracleSession base = MakeSession(s.ground, s.rep);
    const Subset x = GreedyBasisOf(base, RandomSubset(rng, base.domain()));
    ContractView view(base, x);
    const FlatLattice minor = FlatLattice::BuildProbed(view);
    const FlatLattice whole = FlatLattice::BuildProbed(base);
    const Subset span =
        testing::BruteClosure(testing::PredicateOf(s.rep), base.domain(), x);
    std::set<Subset> lifted;
    for (Subset f : minor.flats()) lifted.insert(f | x);
    std::set<Subset> filter;
    for (Subset f : whole.flats()) {
      if (span.IsSubsetOf(f)) filter.insert(f);
    }
    EXPECT_EQ(lifted, filter);
  }
}

TEST(PropertyTest, DualityIsAnInvolution) {
  for (const Sample& s : RandomSamples(5, 15, 5, 10)) {
    OracleSession base = MakeSession(s.ground, s.rep);
    DualView dual(base);
    DualView back(dual);
    for (uint64_t bits = 0; bits < (uint64_t{1} << s.ground.size()); ++bits) {
      ASSERT_EQ(back.Probe(Subset(bits)), base.Probe(Subset(bits)));
    }
  }
}

TEST(PropertyTest, ClosureIsAClosureOperator) {
  std::mt19937_64 rng(6);
  for (const Sample& s : RandomSamples(6, 15, 6, 12)) {
    OracleSession o = MakeSession(s.ground, s.rep);
    for (int t = 0; t < 10; ++t) {
      const Subset x = RandomSubset(rng, o.domain());
      const Subset y = x | RandomSubset(rng, o.domain());
      const Subset cx = Closure(o, x);
      EXPECT_TRUE(x.IsSubsetOf(cx));
      EXPECT_EQ(Closure(o, cx), cx);
      EXPECT_TRUE(cx.IsSubsetOf(Closure(o, y)));
    }
  }
}

TEST(PropertyTest, RankIsSubmodular) {
  std::mt19937_64 rng(7);
  for (const Sample& s : RandomSamples(7, 20, 6, 12)) {
    OracleSession o = MakeSession(s.ground, s.rep);
    for (int t = 0; t < 20; ++t) {
      const Subset x = RandomSubset(rng, o.domain());
      const Subset y = RandomSubset(rng, o.domain());
      EXPECT_LE(Rank(o, x & y) + Rank(o, x | y), Rank(o, x) + Rank(o, y));
    }
  }
}

TEST(PropertyTest, CocircuitsAreDualCircuits) {
  for (const Sample& s : RandomSamples(8, 20, 5, 10)) {
    OracleSession o = MakeSession(s.ground, s.rep);
    std::set<Subset> cocircuits;
    for (const Cocircuit& c : EnumerateCocircuits(o)) {
      cocircuits.insert(c.elements);
    }
    DualView dual(o);
    std::set<Subset> dual_circuits;
    for (const Circuit& c : EnumerateCircuits(dual)) {
      dual_circuits.insert(c.elements);
    }
    EXPECT_EQ(cocircuits, dual_circuits);
  }
}

TEST(PropertyTest, FundamentalCircuitsAreMinimallyDependent) {
  std::mt19937_64 rng(9);
  for (const Sample& s : RandomSamples(9, 20, 5, 10)) {
    OracleSession o = MakeSession(s.ground, s.rep);
    const testing::Predicate pred = testing::PredicateOf(s.rep);
    const Subset basis = GreedyBasisOf(o, o.domain());
    for (int y : o.domain() - basis) {
      const Subset c = FundamentalCircuit(o, basis, y).elements;
      EXPECT_FALSE(pred(c));
      ForEachSubsetOf(c, [&](Subset sub) {
        if (sub != c) EXPECT_TRUE(pred(sub));
      });
    }
  }
}

TEST(PropertyTest, CocircuitMinimaAreIndependent) {
  std::mt19937_64 rng(10);
  for (const Sample& s : RandomSamples(10, 25, 5, 10)) {
    OracleSession o = MakeSession(s.ground, s.rep);
    const WeightMap w = testing::RandomWeights(rng, s.ground.size());
    const std::vector<Cocircuit> co = verify::Cocircuits(o);
    for (int t = 0; t < 10 && !co.empty(); ++t) {
      Subset minima;
      for (const Cocircuit& c : co) {
        if (rng() & 1) minima.Insert(ArgminWeight(c.elements, w));
      }
      EXPECT_TRUE(o.Probe(minima));
    }
  }
}

TEST(PropertyTest, PrivateCircuitMembersLeaveTheSpanAlone) {
  std::mt19937_64 rng(11);
  int exercised = 0;
  for (const Sample& s : RandomSamples(11, 30, 4, 10)) {
    OracleSession o = MakeSession(s.ground, s.rep);
    const std::vector<Circuit> circuits = EnumerateCircuits(o);
    for (int t = 0; t < 10 && !circuits.empty(); ++t) {
      std::vector<Subset> chosen;
      for (const Circuit& c : circuits) {
        if (rng() % 3 == 0) chosen.push_back(c.elements);
      }
      // Each chosen circuit contributes one member found in no other.
      Subset z;
      bool ok = !chosen.empty();
      for (size_t i = 0; i < chosen.size() && ok; ++i) {
        Subset others;
        for (size_t j = 0; j < chosen.size(); ++j) {
          if (j != i) others |= chosen[j];
        }
        const Subset own = chosen[i] - others;
        if (own.empty()) {
          ok = false;
        } else {
          z.Insert(own.front());
        }
      }
      if (!ok) continue;
      Subset y;
      for (Subset c : chosen) y |= c;
      y |= RandomSubset(rng, o.domain()) - z;
      EXPECT_EQ(Closure(o, y), Closure(o, y - z));
      ++exercised;
    }
  }
  EXPECT_GT(exercised, 20);
}

TEST(PropertyTest, LatticeLaws) {
  for (const Sample& s : RandomSamples(12, 12, 4, 8)) {
    OracleSession o = MakeSession(s.ground, s.rep);
    const FlatLattice l = FlatLattice::BuildProbed(o);
    EXPECT_TRUE(IsGeometric(l));
    for (int a = 0; a < l.size(); ++a) {
      EXPECT_EQ(l.rank_of(a), o.ProbeRank(l.flat(a)));
      for (int b = 0; b < l.size(); ++b) {
        EXPECT_EQ(l.Meet(a, b), l.Meet(b, a));
        EXPECT_EQ(l.Join(a, b), l.Join(b, a));
        EXPECT_EQ(l.Meet(a, l.Join(a, b)), a);
        EXPECT_EQ(l.Join(a, l.Meet(a, b)), a);
        for (int c = 0; c < l.size(); c += 2) {
          EXPECT_EQ(l.Meet(l.Meet(a, b), c), l.Meet(a, l.Meet(b, c)));
          EXPECT_EQ(l.Join(l.Join(a, b), c), l.Join(a, l.Join(b, c)));
        }
        const int meet = l.Meet(a, b);
        if (a != b && l.Covers(a, meet) && l.Covers(b, meet)) {
          EXPECT_TRUE(verify::ProbeModularPair(o, l.flat(a), l.flat(b)));
        }
      }
    }
  }
}

// Free: the generated sublattice is Boolean on these atoms. Each flat
// covers the common meet, so they are atoms of the sublattice already.
bool IsFree(const FlatLattice& l, const std::vector<int>& flats) {
  const Sublattice sub = SublatticeGenerated(l, flats);
  return IsBooleanAlgebra(l, sub) &&
         sub.members.size() == (size_t{1} << flats.size());
}

bool HasIndependentRepresentatives(const Oracle& o, const FlatLattice& l,
                                   const std::vector<int>& flats, int meet) {
  const Subset base = l.flat(meet);
  const int base_rank = o.ProbeRank(base);
  std::vector<std::vector<int>> choices;
  for (int f : flats) choices.push_back((l.flat(f) - base).Indices());
  std::vector<size_t> pick(flats.size(), 0);
  while (true) {
    Subset points;
    for (size_t i = 0; i < flats.size(); ++i) {
      points.Insert(choices[i][pick[i]]);
    }
    if (o.ProbeRank(base | points) == base_rank + static_cast<int>(flats.size()))
      return true;
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) return false;
  }
}

TEST(PropertyTest, FreeSetsHaveIndependentRepresentatives) {
  std::mt19937_64 rng(13);
  int free_seen = 0;
  int non_free_seen = 0;
  std::vector<Sample> samples = RandomSamples(13, 25, 4, 8);
  // U_4^2 supplies non-free triples of points.
  for (int trial = 0; trial < 26; ++trial) {
    const bool uniform = trial == 25;
    OracleSession o = uniform ? MakeUniformSession(4, 2)
                              : MakeSession(samples[trial].ground,
                                            samples[trial].rep);
    const FlatLattice l = FlatLattice::BuildProbed(o);
    for (int meet = 0; meet < l.size(); ++meet) {
      const std::vector<int>& ups = l.upper_covers(meet);
      if (ups.size() < 2) continue;
      for (int t = 0; t < 6; ++t) {
        std::vector<int> family;
        for (int u : ups) {
          if (rng() % 2) family.push_back(u);
        }
        if (family.size() < 2) continue;
        const bool free = IsFree(l, family);
        EXPECT_EQ(free, HasIndependentRepresentatives(o, l, family, meet));
        (free ? free_seen : non_free_seen)++;
      }
    }
  }
  EXPECT_GT(free_seen, 0);
  EXPECT_GT(non_free_seen, 0);
}

// Cocircuits Γ(σ(B - x)) of the hyperplanes generated by a basis.
std::vector<Subset> FundamentalCocircuits(const Oracle& o, Subset basis) {
  std::vector<Subset> out;
  const IndependenceTable t = IndependenceTable::Probed(o, 12);
  for (int x : basis) out.push_back(o.domain() - t.Closure(basis.Without(x)));
  return out;
}

TEST(PropertyTest, CofreeCocircuitsHavePrivatePointsAndDistinctDifferences) {
  for (const Sample& s : RandomSamples(14, 20, 5, 9)) {
    OracleSession o = MakeSession(s.ground, s.rep);
    for (Subset b :
         testing::BruteBases(testing::PredicateOf(s.rep), o.domain())) {
      const std::vector<Subset> co = FundamentalCocircuits(o, b);
      std::set<Subset> differences;
      for (size_t i = 0; i < co.size(); ++i) {
        Subset others;
        for (size_t j = 0; j < co.size(); ++j) {
          if (j != i) others |= co[j];
          if (j > i) differences.insert(co[i] ^ co[j]);
        }
        EXPECT_FALSE((co[i] - others).empty());
      }
      EXPECT_EQ(differences.size(), co.size() * (co.size() - 1) / 2);
    }
  }
}

TEST(PropertyTest, CocircuitDichotomyFailsOnTheNineEdgeTree) {
  // A point of a cofree cocircuit family can lie in some but not all of
  // them: e5 sits in the fundamental cocircuits of e3 and e4 only.
  OracleSession p = MakeSession(fixtures::Paper9Graph());
  const GroundSet& g = p.ground();
  const Subset tree = g.Parse({"e1", "e2", "e3", "e4", "e6", "e7"});
  const std::vector<Subset> co = FundamentalCocircuits(p, tree);
  const int e5 = *g.Find("e5");
  int holding = 0;
  for (Subset c : co) holding += c.contains(e5);
  EXPECT_EQ(holding, 2);
  EXPECT_EQ(co.size(), 6u);
}

TEST(PropertyTest, ReductionMatchesGreedyAndBruteForce) {
  std::mt19937_64 rng(15);
  for (const Sample& s : RandomSamples(15, 60, 6, 12)) {
    const WeightMap w = testing::RandomWeights(rng, s.ground.size());
    OracleSession a = MakeSession(s.ground, s.rep);
    OracleSession b = MakeSession(s.ground, s.rep);
    const RunReport reduction = OptimizeBinary(a, w);
    const RunReport greedy = Greedy(b, w);
    EXPECT_EQ(reduction.solution, greedy.solution);
    EXPECT_EQ(reduction.solution, testing::BruteOptimum(
                                      testing::PredicateOf(s.rep),
                                      a.domain(), w));
    // Every added point is the minimum of some cocircuit of the matroid.
    EXPECT_EQ(reduction.solution, verify::CocircuitMinima(a, w));
    Subset partial;
    for (const IterationRecord& it : reduction.per_iteration) {
      partial |= it.direct | it.symmetric;
      EXPECT_TRUE(a.Probe(partial));
    }
  }
}

TEST(PropertyTest, GraphicAlgorithmsAgree) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const GraphRep g = testing::RandomGraph(rng, 2 + trial % 7, 3 + trial % 9);
    const WeightMap w =
        testing::RandomWeights(rng, static_cast<int>(g.edges.size()));
    OracleSession a = MakeSession(g);
    OracleSession b = MakeSession(g);
    const RunReport boruvka = Boruvka(g, w);
    EXPECT_EQ(boruvka.solution, Greedy(a, w).solution);
    EXPECT_EQ(boruvka.solution, OptimizeBinary(b, w).solution);
  }
}

TEST(PropertyTest, BoruvkaRoundsAreLogarithmicOnConnectedGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int v = 2 + trial % 9;
    GraphRep g;
    while (true) {
      g = testing::RandomGraph(rng, v, v + trial % 6);
      const Subset all = Subset::Full(static_cast<int>(g.edges.size()));
      if (testing::BruteRank(testing::PredicateOf(g), all) == v - 1) break;
    }
    const WeightMap w =
        testing::RandomWeights(rng, static_cast<int>(g.edges.size()));
    int log = 0;
    while ((1 << log) < v) ++log;
    EXPECT_LE(Boruvka(g, w).rounds, log);
  }
}

}  // namespace
}  // namespace matroid
