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

#ifndef MATROID_ALGORITHMS_H_
#define MATROID_ALGORITHMS_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matroid/oracle.h"
#include "matroid/representations.h"
#include "matroid/subset.h"
#include "matroid/weights.h"

namespace matroid {

// What one outer iteration of the reduction contributed.
struct IterationRecord {
  Subset basis;           // basis of the contraction returned by the search
  int contraction_rank = 0;
  Subset direct;          // minima of the basis cocircuits
  Subset symmetric;       // minima of symmetric differences in collisions
  long rounds_after = 0;  // ledger rounds when the iteration finished
};

struct RunReport {
  std::string algorithm;
  Subset solution;
  double total_weight = 0;
  long rounds = 0;
  long queries = 0;
  long basis_calls = 0;
  int outer_iterations = 0;
  std::vector<IterationRecord> per_iteration;
};

// Returns a basis of the matroid behind the oracle.
using BasisSearchFn = std::function<Subset(Oracle&)>;

// Scans elements in increasing weight, one round per element.
RunReport Greedy(Oracle& oracle, const WeightMap& w);

// Minimum spanning forest by repeated component minima. `rounds` counts
// while-loop iterations; no oracle is involved.
RunReport Boruvka(const GraphRep& g, const WeightMap& w);

// Per-iteration state of the block search, for invariant checks.
struct KuwIteration {
  Subset partial;
  Subset remaining;  // union of the blocks at the loop head
  bool augmented = false;
};

struct KuwOptions {
  // Verify closure(partial u blocks) = domain at every loop head through
  // Oracle::ProbeRank. Throws FaultyOracleError on failure.
  bool check_invariant = false;
  std::vector<KuwIteration>* trace = nullptr;
};

// ceil(sqrt(n)) blocks filled in index order, sizes differing by at most one.
std::vector<Subset> KuwBlocks(Subset domain);

// Basis search by whole-block augmentation and prefix-based pruning.
Subset KuwBasisSearch(Oracle& oracle, const KuwOptions& options = {});

struct ReductionOptions {
  // Check each returned basis (and the partial solution) by probing.
  bool check_results = true;
  // Confirm termination with a one-round scan for continuations. Needed when
  // the search is not known to return the empty set only at rank zero.
  bool confirm_termination = true;
};

// Minimum-weight basis of a binary matroid from repeated basis searches on
// contractions. Non-binary inputs are not rejected; the result may then be
// suboptimal, or the partial solution may turn dependent, which surfaces as
// InvalidContractionError.
RunReport ReductionOptimize(Oracle& oracle, const WeightMap& w,
                            const BasisSearchFn& search,
                            const ReductionOptions& options = {});

// ReductionOptimize with KuwBasisSearch.
RunReport OptimizeBinary(Oracle& oracle, const WeightMap& w);

}  // namespace matroid

#endif  // MATROID_ALGORITHMS_H_
