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

#ifndef MATROID_TESTS_BRUTE_ORACLES_H_
#define MATROID_TESTS_BRUTE_ORACLES_H_

// Reference implementations that share no code with the library: dense
// elimination, union-find acyclicity and exhaustive enumeration.

#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "matroid/oracle.h"
#include "matroid/representations.h"
#include "matroid/subset.h"
#include "matroid/weights.h"

namespace matroid::testing {

using Predicate = std::function<bool(Subset)>;

// Dense row reduction over GF(2) on the selected columns.
bool DenseGf2Independent(const BinaryRep& rep, Subset s);
// Union-find cycle detection on the selected edges.
bool EdgesAcyclic(const GraphRep& g, Subset s);

int BruteRank(const Predicate& independent, Subset x);
std::vector<Subset> BruteBases(const Predicate& independent, Subset ground);
std::vector<Subset> BruteCircuits(const Predicate& independent, Subset ground);
// Minimal sets meeting every basis.
std::vector<Subset> BruteCocircuits(const Predicate& independent,
                                    Subset ground);
std::vector<Subset> BruteFlats(const Predicate& independent, Subset ground);
Subset BruteClosure(const Predicate& independent, Subset ground, Subset x);
// Lightest basis by total weight, ties broken by the sorted weight sequence.
Subset BruteOptimum(const Predicate& independent, Subset ground,
                    const WeightMap& w);

Predicate PredicateOf(const BinaryRep& rep);
Predicate PredicateOf(const GraphRep& g);

BinaryRep RandomBinary(std::mt19937_64& rng, int rows, int cols);
// Random multigraph; loops and parallel edges allowed unless `simple`.
GraphRep RandomGraph(std::mt19937_64& rng, int vertices, int edges,
                     bool simple = false);
// A random permutation of 1..n as weights.
WeightMap RandomWeights(std::mt19937_64& rng, int n);

// Independent iff size <= 2, except for one missing 1-subset: a hereditary
// hole under a plain predicate.
class HereditaryHoleBackend : public IndependenceBackend {
 public:
  explicit HereditaryHoleBackend(int n) : n_(n) {}
  int size() const override { return n_; }
  bool IsIndependent(Subset s) const override {
    return s.size() <= 2 && s != Subset{0};
  }

 private:
  int n_;
};

}  // namespace matroid::testing

#endif  // MATROID_TESTS_BRUTE_ORACLES_H_
