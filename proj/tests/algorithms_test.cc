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

#include <cmath>
#include <random>
#include <vector>

#include "brute_oracles.h"
#include "gtest/gtest.h"
#include "matroid/algorithms.h"
#include "matroid/derived.h"
#include "matroid/errors.h"
#include "matroid/fixtures.h"
#include "matroid/representations.h"
#include "matroid/views.h"

namespace matroid {
namespace {

int CeilSqrt(int n) {
  int k = 0;
  while (k * k < n) ++k;
  return k;
}

int CeilLog2(int r) {
  int k = 0;
  while ((1 << k) < r) ++k;
  return k;
}

const Subset kPaper9Optimum = Subset{0, 1, 2, 3, 5, 6};  // e1..e4, e6, e7

TEST(GreedyTest, Examples) {
  OracleSession p = MakeSession(fixtures::Paper9Graph());
  const RunReport r = Greedy(p, WeightMap::Ascending(9));
  EXPECT_EQ(r.solution, kPaper9Optimum);
  EXPECT_EQ(r.total_weight, 23);
  EXPECT_EQ(r.rounds, 9);
  EXPECT_EQ(r.queries, 9);

  const BinaryInstance zero = fixtures::RankZero(4);
  OracleSession z = MakeSession(zero.ground, zero.rep);
  EXPECT_EQ(Greedy(z, WeightMap::Ascending(4)).solution, Subset());

  OracleSession u = MakeUniformSession(4, 2);
  EXPECT_EQ(Greedy(u, WeightMap::Ascending(4)).solution,
            u.ground().Parse({"a", "b"}));
}

TEST(BoruvkaTest, Paper9TwoRounds) {
  const RunReport r = Boruvka(fixtures::Paper9Graph(), WeightMap::Ascending(9));
  EXPECT_EQ(r.solution, kPaper9Optimum);
  EXPECT_EQ(r.rounds, 2);
  EXPECT_EQ(r.total_weight, 23);
}

TEST(BoruvkaTest, SingleVertexAndForest) {
  EXPECT_EQ(Boruvka(GraphRep{1, {}}, WeightMap()).solution, Subset());
  // Two triangles, no edge between them.
  GraphRep g{6,
             {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"},
              {3, 4, "d"}, {4, 5, "e"}, {3, 5, "f"}}};
  const WeightMap w({3, 1, 2, 6, 5, 4});
  const RunReport r = Boruvka(g, w);
  EXPECT_EQ(r.solution,
            testing::BruteOptimum(testing::PredicateOf(g), Subset::Full(6), w));
  EXPECT_EQ(r.solution, (Subset{1, 2, 4, 5}));
}

TEST(KuwTest, BlocksAreBalancedAndInIndexOrder) {
  const std::vector<Subset> b = KuwBlocks(Subset::Full(10));
  ASSERT_EQ(b.size(), 4u);
  EXPECT_EQ(b[0], (Subset{0, 1, 2}));
  EXPECT_EQ(b[1], (Subset{3, 4, 5}));
  EXPECT_EQ(b[2], (Subset{6, 7}));
  EXPECT_EQ(b[3], (Subset{8, 9}));
  EXPECT_EQ(KuwBlocks(Subset{1, 5, 9, 12}),
            (std::vector<Subset>{Subset{1, 5}, Subset{9, 12}}));
  EXPECT_TRUE(KuwBlocks(Subset()).empty());
}

TEST(KuwTest, U42HandSimulation) {
  OracleSession u = MakeUniformSession(4, 2);
  std::vector<KuwIteration> trace;
  KuwOptions options;
  options.check_invariant = true;
  options.trace = &trace;
  EXPECT_EQ(KuwBasisSearch(u, options), (Subset{0, 1}));
  // A(augment), A, B(remove c), A, B(remove d), stop.
  EXPECT_EQ(u.ledger().rounds, 5);
  EXPECT_EQ(u.ledger().per_round_sizes, (std::vector<long>{2, 1, 2, 1, 1}));
  ASSERT_EQ(trace.size(), 4u);
  EXPECT_TRUE(trace[0].augmented);
  EXPECT_EQ(trace[1].remaining, (Subset{2, 3}));
  EXPECT_EQ(trace[2].remaining, (Subset{3}));
  EXPECT_EQ(trace[3].remaining, Subset());
}

TEST(KuwTest, FreeAndRankZero) {
  const BinaryInstance free = fixtures::Free(4);
  OracleSession f = MakeSession(free.ground, free.rep);
  EXPECT_EQ(KuwBasisSearch(f), Subset::Full(4));
  EXPECT_EQ(f.ledger().rounds, 2);

  for (int n : {1, 4, 7, 9}) {
    const BinaryInstance zero = fixtures::RankZero(n);
    OracleSession z = MakeSession(zero.ground, zero.rep);
    std::vector<KuwIteration> trace;
    KuwOptions options;
    options.trace = &trace;
    EXPECT_EQ(KuwBasisSearch(z, options), Subset());
    EXPECT_LE(static_cast<int>(trace.size()), 2 * CeilSqrt(n) + 1);
    EXPECT_LE(z.ledger().rounds, 2 * CeilSqrt(n) + 2);
  }
}

TEST(KuwTest, EmptyDomainIssuesNoQuery) {
  OracleSession u = MakeUniformSession(2, 1);
  ContractView view(u, Subset{0});
  DeleteView empty(view, Subset{1});
  EXPECT_EQ(KuwBasisSearch(empty), Subset());
  EXPECT_EQ(u.ledger().rounds, 1);
}

TEST(KuwTest, FaultyOracleBreaksInvariant) {
  // An oracle that calls everything dependent while its probes say otherwise.
  class Liar : public Oracle {
   public:
    Liar() : ground_(GroundSet::Numbered(4)) {}
    const GroundSet& ground() const override { return ground_; }
    Subset domain() const override { return ground_.all(); }
    QueryLedger& ledger() override { return ledger_; }
    bool Probe(Subset s) const override { return s.size() <= 1; }

   protected:
    std::vector<bool> Evaluate(std::span<const Subset> batch) override {
      return std::vector<bool>(batch.size(), false);
    }

   private:
    GroundSet ground_;
    QueryLedger ledger_;
  } liar;
  KuwOptions options;
  options.check_invariant = true;
  EXPECT_THROW(KuwBasisSearch(liar, options), FaultyOracleError);
}

TEST(ReductionTest, Paper9) {
  OracleSession p = MakeSession(fixtures::Paper9Graph());
  const RunReport r = OptimizeBinary(p, WeightMap::Ascending(9));
  EXPECT_EQ(r.solution, kPaper9Optimum);
  EXPECT_EQ(r.total_weight, 23);
  EXPECT_EQ(r.algorithm, "reduction-kuw");
  EXPECT_LE(r.rounds, (CeilLog2(6) + 1) * (2 * CeilSqrt(9) + 2));
  EXPECT_LE(r.outer_iterations, CeilLog2(6) + 1);
  EXPECT_EQ(r.basis_calls, r.outer_iterations + 1);
  EXPECT_EQ(r.rounds, p.ledger().rounds);
}

TEST(ReductionTest, ParallelPair) {
  OracleSession s = MakeSession(GroundSet({"x", "y"}), BinaryRep(1, {1, 1}));
  const RunReport r = OptimizeBinary(s, WeightMap({1, 2}));
  EXPECT_EQ(r.solution, Subset{0});
  EXPECT_EQ(r.outer_iterations, 1);
  ASSERT_EQ(r.per_iteration.size(), 1u);
  EXPECT_EQ(r.per_iteration[0].direct, Subset{0});
}

TEST(ReductionTest, FigSmall) {
  OracleSession fig = MakeSession(fixtures::FigSmallGraph());
  const RunReport r = OptimizeBinary(fig, WeightMap::Ascending(4));
  EXPECT_EQ(r.solution, fig.ground().Parse({"a", "b", "c"}));
}

TEST(ReductionTest, FreeMatroidReturnsEverything) {
  const BinaryInstance free = fixtures::Free(6);
  OracleSession f = MakeSession(free.ground, free.rep);
  std::mt19937_64 rng(3);
  EXPECT_EQ(OptimizeBinary(f, testing::RandomWeights(rng, 6)).solution,
            Subset::Full(6));
}

TEST(ReductionTest, ExternalSearchConfirmsTermination) {
  OracleSession p = MakeSession(fixtures::Paper9Graph());
  auto search = [](Oracle& view) { return GreedyBasisOf(view, view.domain()); };
  const RunReport r = ReductionOptimize(p, WeightMap::Ascending(9), search);
  EXPECT_EQ(r.solution, kPaper9Optimum);
  EXPECT_EQ(r.algorithm, "reduction");
}

TEST(ReductionTest, FaultySearchIsRejected) {
  OracleSession p = MakeSession(fixtures::Paper9Graph());
  auto bad = [](Oracle&) { return Subset{2, 3, 4}; };
  EXPECT_THROW(ReductionOptimize(p, WeightMap::Ascending(9), bad),
               FaultyOracleError);
  auto lazy = [](Oracle&) { return Subset(); };
  EXPECT_THROW(ReductionOptimize(p, WeightMap::Ascending(9), lazy),
               FaultyOracleError);
  ReductionOptions unchecked;
  unchecked.check_results = false;
  EXPECT_THROW(ReductionOptimize(p, WeightMap::Ascending(9), lazy, unchecked),
               FaultyOracleError);
}

TEST(ReductionTest, CollisionsAddSymmetricDifferenceMinima) {
  // Rank 3 binary matroid whose first basis makes two cocircuits share
  // their minimum; the collision contributes a third point.
  std::mt19937_64 rng(17);
  int collisions = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryRep rep = testing::RandomBinary(rng, 4, 8);
    OracleSession s = MakeSession(GroundSet::Numbered(8), rep);
    const WeightMap w = testing::RandomWeights(rng, 8);
    const RunReport r = OptimizeBinary(s, w);
    for (const IterationRecord& it : r.per_iteration) {
      if (!(it.symmetric - it.direct).empty()) ++collisions;
    }
    ASSERT_EQ(r.solution,
              testing::BruteOptimum(testing::PredicateOf(rep), s.domain(), w));
  }
  EXPECT_GT(collisions, 0);
}

}  // namespace
}  // namespace matroid
