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

#ifndef MATROID_VERIFY_H_
#define MATROID_VERIFY_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/algorithms.h"
#include "matroid/derived.h"
#include "matroid/lattice.h"
#include "matroid/oracle.h"
#include "matroid/representations.h"
#include "matroid/subset.h"
#include "matroid/weights.h"

// Exhaustive checkers for small instances. Everything here evaluates through
// Oracle::Probe and leaves the ledger untouched.
namespace matroid::verify {

// Minimum-weight basis by enumerating every subset. Throws
// ResourceGuardError past `max_elements`.
Subset BruteForceOptimum(const Oracle& oracle, const WeightMap& w,
                         int max_elements = kMaxCircuitElements);

// All cocircuits through the unmetered lattice.
std::vector<Cocircuit> Cocircuits(const Oracle& oracle,
                                  int max_elements = kMaxLatticeElements);

// The minimum-weight point of every cocircuit.
Subset CocircuitMinima(const Oracle& oracle, const WeightMap& w,
                       int max_elements = kMaxLatticeElements);

enum class CertificateKind { kOptimal, kSuboptimal, kViolatedInvariant };

struct Certificate {
  CertificateKind kind = CertificateKind::kOptimal;
  // Cocircuits whose minimum lies outside the candidate, with that minimum.
  std::vector<std::pair<Subset, int>> uncovered;
  // Candidate elements that are no cocircuit's minimum.
  Subset extraneous;
  // For kSuboptimal: swapping `exchange_out` for `exchange_in` yields a
  // lighter basis.
  int exchange_out = -1;
  int exchange_in = -1;
  std::string message;
};

// Optimal iff `x` equals the set of cocircuit minima.
Certificate CheckCocircuitCertificate(const Oracle& oracle, const WeightMap& w,
                                      Subset x,
                                      int max_elements = kMaxLatticeElements);

// Modular pair under Oracle::ProbeRank.
bool ProbeModularPair(const Oracle& oracle, Subset x, Subset y);

// Circuits through probing (no ledger charges).
std::vector<Circuit> ProbeCircuits(const Oracle& oracle,
                                   int max_elements = kMaxCircuitElements);

struct WhiteResult {
  bool ok = true;
  Subset first;
  Subset second;
};

// Every modular pair of distinct intersecting circuits has a circuit as its
// symmetric difference.
WhiteResult CheckWhite(const Oracle& oracle,
                       int max_elements = kMaxLatticeElements);

struct TutteWhiteResult {
  bool agree = true;
  bool white_ok = true;
  std::optional<FlatInterval> primal_interval;
  std::optional<FlatInterval> dual_interval;
};

TutteWhiteResult CheckTutteWhiteAgreement(const Oracle& oracle,
                                          int max_elements = 10);

struct DualityResult {
  bool ok = true;
  std::string violation;
};

// Continuations of hyperplanes are exactly the dual circuits, and cocircuits
// are a modular pair under the dual rank iff their hyperplanes are under
// the rank.
DualityResult CheckDualityLemmas(const Oracle& oracle, int max_elements = 10);

// Independence in the dual, through Oracle::ProbeRank.
IndependenceTable DualTable(const Oracle& oracle, int max_elements);

struct AxiomResult {
  bool ok = true;
  std::string axiom;  // "nonempty", "hereditary" or "exchange"
  Subset first;
  Subset second;
};

AxiomResult CheckAxioms(const Oracle& oracle,
                        int max_elements = kMaxLatticeElements);

// Search versus optimization: a rank-2 binary matroid whose stored labelling
// makes the block search return a heavier basis than the optimum.
struct KuwRemarkFixture {
  GroundSet ground;
  BinaryRep rep;
  WeightMap weights;
  std::vector<Subset> blocks;
};

KuwRemarkFixture KuwSortedCounterexample();

struct KuwRemarkDemonstration {
  Subset kuw_basis;
  Subset optimum;
  Subset reduction;
  double kuw_weight = 0;
  double optimum_weight = 0;
};

KuwRemarkDemonstration DemonstrateKuwRemark(const KuwRemarkFixture& fixture);

}  // namespace matroid::verify

#endif  // MATROID_VERIFY_H_
