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

#include "matroid/verify.h"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matroid/errors.h"

namespace matroid::verify {
namespace {

// Lexicographic comparison of the (weight, index)-sorted members; decides
// between equal totals deterministically.
bool LighterBasis(Subset a, Subset b, const WeightMap& w) {
  const double ta = w.Total(a);
  const double tb = w.Total(b);
  if (ta != tb) return ta < tb;
  std::vector<int> sa = w.Sorted(a);
  std::vector<int> sb = w.Sorted(b);
  return std::lexicographical_compare(
      sa.begin(), sa.end(), sb.begin(), sb.end(),
      [&w](int x, int y) { return w.Less(x, y); });
}

int DualProbeRank(const Oracle& oracle, Subset x, int full_rank) {
  return oracle.ProbeRank(oracle.domain() - x) + x.size() - full_rank;
}

}  // namespace

Subset BruteForceOptimum(const Oracle& oracle, const WeightMap& w,
                         int max_elements) {
  const IndependenceTable table =
      IndependenceTable::Probed(oracle, max_elements);
  const int rank = table.Rank(table.domain());
  bool found = false;
  Subset best;
  ForEachSubsetOf(table.domain(), [&](Subset s) {
    if (s.size() != rank || !table.independent(s)) return;
    if (!found || LighterBasis(s, best, w)) {
      best = s;
      found = true;
    }
  });
  return best;
}

std::vector<Cocircuit> Cocircuits(const Oracle& oracle, int max_elements) {
  return CocircuitsOf(IndependenceTable::Probed(oracle, max_elements));
}

Subset CocircuitMinima(const Oracle& oracle, const WeightMap& w,
                       int max_elements) {
  Subset minima;
  for (const Cocircuit& c : Cocircuits(oracle, max_elements)) {
    minima.Insert(ArgminWeight(c.elements, w));
  }
  return minima;
}

Certificate CheckCocircuitCertificate(const Oracle& oracle, const WeightMap& w,
                                      Subset x, int max_elements) {
  Certificate cert;
  const GroundSet& ground = oracle.ground();
  if (!x.IsSubsetOf(oracle.domain())) {
    cert.kind = CertificateKind::kViolatedInvariant;
    cert.message = "candidate leaves the ground set";
    return cert;
  }
  const std::vector<Cocircuit> cocircuits = Cocircuits(oracle, max_elements);
  Subset minima;
  for (const Cocircuit& c : cocircuits) {
    const int z = ArgminWeight(c.elements, w);
    minima.Insert(z);
    if (!x.contains(z)) cert.uncovered.emplace_back(c.elements, z);
  }
  cert.extraneous = x - minima;
  if (x == minima) {
    cert.kind = CertificateKind::kOptimal;
    cert.message = "every element is the minimum of some cocircuit";
    return cert;
  }
  const int rank = oracle.ProbeRank(oracle.domain());
  if (!oracle.Probe(x) || x.size() != rank) {
    cert.kind = CertificateKind::kViolatedInvariant;
    cert.message = ground.Format(x) + " is not a basis";
    return cert;
  }
  if (cert.uncovered.empty()) {
    cert.kind = CertificateKind::kViolatedInvariant;
    cert.message = "basis differs from the cocircuit minima but covers them";
    return cert;
  }
  // The cocircuit meets the fundamental circuit of its minimum z in a second
  // element y of x, and swapping y for z keeps a basis.
  const auto& [cocircuit, z] = cert.uncovered.front();
  Subset fundamental = Subset::Singleton(z);
  for (int e : x) {
    if (oracle.Probe(x.Without(e).With(z))) fundamental.Insert(e);
  }
  const Subset candidates = (fundamental & cocircuit).Without(z);
  if (candidates.empty()) {
    cert.kind = CertificateKind::kViolatedInvariant;
    cert.message = "no exchange partner in the uncovered cocircuit";
    return cert;
  }
  int out = candidates.front();
  for (int e : candidates) {
    if (w.Less(out, e)) out = e;
  }
  cert.kind = CertificateKind::kSuboptimal;
  cert.exchange_out = out;
  cert.exchange_in = z;
  cert.message = "cocircuit " + ground.Format(cocircuit) + " has minimum " +
                 ground.name(z) + " outside the basis; swapping " +
                 ground.name(out) + " for " + ground.name(z) +
                 " lowers the weight";
  return cert;
}

bool ProbeModularPair(const Oracle& oracle, Subset x, Subset y) {
  return oracle.ProbeRank(x & y) + oracle.ProbeRank(x | y) ==
         oracle.ProbeRank(x) + oracle.ProbeRank(y);
}

std::vector<Circuit> ProbeCircuits(const Oracle& oracle, int max_elements) {
  return CircuitsOf(IndependenceTable::Probed(oracle, max_elements));
}

WhiteResult CheckWhite(const Oracle& oracle, int max_elements) {
  const std::vector<Circuit> circuits = ProbeCircuits(oracle, max_elements);
  std::unordered_set<Subset, SubsetHash> known;
  for (const Circuit& c : circuits) known.insert(c.elements);
  for (size_t i = 0; i < circuits.size(); ++i) {
    for (size_t j = i + 1; j < circuits.size(); ++j) {
      const Subset a = circuits[i].elements;
      const Subset b = circuits[j].elements;
      if (!a.Intersects(b) || !ProbeModularPair(oracle, a, b)) continue;
      if (!known.count(a ^ b)) return {false, a, b};
    }
  }
  return {};
}

IndependenceTable DualTable(const Oracle& oracle, int max_elements) {
  const Subset domain = oracle.domain();
  const int full_rank = oracle.ProbeRank(domain);
  return IndependenceTable::FromPredicate(
      domain, max_elements, [&oracle, domain, full_rank](Subset s) {
        return oracle.ProbeRank(domain - s) == full_rank;
      });
}

TutteWhiteResult CheckTutteWhiteAgreement(const Oracle& oracle,
                                          int max_elements) {
  TutteWhiteResult result;
  result.white_ok = CheckWhite(oracle, max_elements).ok;
  result.primal_interval =
      FindU42Interval(FlatLattice::BuildProbed(oracle, max_elements));
  result.dual_interval = FindU42Interval(
      FlatLattice::FromTable(DualTable(oracle, max_elements)));
  const bool primal_clear = !result.primal_interval.has_value();
  const bool dual_clear = !result.dual_interval.has_value();
  result.agree =
      primal_clear == dual_clear && result.white_ok == primal_clear;
  return result;
}

DualityResult CheckDualityLemmas(const Oracle& oracle, int max_elements) {
  const GroundSet& ground = oracle.ground();
  const std::vector<Cocircuit> cocircuits = Cocircuits(oracle, max_elements);
  const std::vector<Circuit> dual_circuits =
      CircuitsOf(DualTable(oracle, max_elements));

  std::set<Subset> from_hyperplanes;
  for (const Cocircuit& c : cocircuits) from_hyperplanes.insert(c.elements);
  std::set<Subset> from_dual;
  for (const Circuit& c : dual_circuits) from_dual.insert(c.elements);
  if (from_hyperplanes != from_dual) {
    return {false,
            "continuations of hyperplanes differ from the dual circuits"};
  }

  const int full_rank = oracle.ProbeRank(oracle.domain());
  for (size_t i = 0; i < cocircuits.size(); ++i) {
    for (size_t j = i + 1; j < cocircuits.size(); ++j) {
      const Subset c1 = cocircuits[i].elements;
      const Subset c2 = cocircuits[j].elements;
      const bool dual_modular =
          DualProbeRank(oracle, c1 & c2, full_rank) +
              DualProbeRank(oracle, c1 | c2, full_rank) ==
          DualProbeRank(oracle, c1, full_rank) +
              DualProbeRank(oracle, c2, full_rank);
      const bool hyperplanes_modular = ProbeModularPair(
          oracle, cocircuits[i].hyperplane, cocircuits[j].hyperplane);
      if (dual_modular != hyperplanes_modular) {
        return {false, "cocircuits " + ground.Format(c1) + " and " +
                           ground.Format(c2) +
                           " disagree with their hyperplanes on modularity"};
      }
    }
  }
  return {};
}

AxiomResult CheckAxioms(const Oracle& oracle, int max_elements) {
  const IndependenceTable table =
      IndependenceTable::Probed(oracle, max_elements);
  const Subset domain = table.domain();
  if (!table.independent(Subset())) {
    return {false, "nonempty", Subset(), Subset()};
  }
  std::vector<std::vector<Subset>> by_size(domain.size() + 2);
  AxiomResult violation;
  ForEachSubsetOf(domain, [&](Subset s) {
    if (!violation.ok || !table.independent(s)) return;
    by_size[s.size()].push_back(s);
    for (int e : s) {
      if (!table.independent(s.Without(e))) {
        violation = {false, "hereditary", s, s.Without(e)};
        return;
      }
    }
  });
  if (!violation.ok) return violation;
  // With heredity in place, exchange between sizes k and k + 1 suffices.
  for (size_t k = 0; k + 1 < by_size.size(); ++k) {
    for (Subset x : by_size[k]) {
      for (Subset y : by_size[k + 1]) {
        bool extended = false;
        for (int e : y - x) {
          if (table.independent(x.With(e))) {
            extended = true;
            break;
          }
        }
        if (!extended) return {false, "exchange", x, y};
      }
    }
  }
  return {};
}

KuwRemarkFixture KuwSortedCounterexample() {
  // Index order fixes the blocks: {x2, x3}, {l1, l2}, {x1}. x1 and x3 are
  // parallel; l1 and l2 are loops.
  KuwRemarkFixture fixture;
  fixture.ground = GroundSet({"x2", "x3", "l1", "l2", "x1"});
  fixture.rep = BinaryRep(2, {0b10, 0b01, 0b00, 0b00, 0b01});
  fixture.weights = WeightMap({2, 3, 4, 5, 1});
  fixture.blocks = KuwBlocks(fixture.ground.all());
  return fixture;
}

KuwRemarkDemonstration DemonstrateKuwRemark(const KuwRemarkFixture& fixture) {
  KuwRemarkDemonstration demo;
  OracleSession search_session = MakeSession(fixture.ground, fixture.rep);
  demo.kuw_basis = KuwBasisSearch(search_session);
  demo.optimum = BruteForceOptimum(search_session, fixture.weights);
  OracleSession reduction_session = MakeSession(fixture.ground, fixture.rep);
  demo.reduction = OptimizeBinary(reduction_session, fixture.weights).solution;
  demo.kuw_weight = fixture.weights.Total(demo.kuw_basis);
  demo.optimum_weight = fixture.weights.Total(demo.optimum);
  return demo;
}

}  // namespace matroid::verify
