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

#include "matroid/report_json.h"

#include <nlohmann/json.hpp>

namespace matroid {

using nlohmann::json;

json NamesJson(const GroundSet& ground, Subset s) {
  return json(ground.Names(s));
}

json ToJson(const RunReport& report, const GroundSet& ground) {
  json iterations = json::array();
  for (const IterationRecord& it : report.per_iteration) {
    iterations.push_back({
        {"basis", NamesJson(ground, it.basis)},
        {"contraction_rank", it.contraction_rank},
        {"direct", NamesJson(ground, it.direct)},
        {"symmetric_differences", NamesJson(ground, it.symmetric)},
    });
  }
  return {
      {"algorithm", report.algorithm},
      {"solution", NamesJson(ground, report.solution)},
      {"weight", report.total_weight},
      {"rounds", report.rounds},
      {"queries", report.queries},
      {"basis_calls", report.basis_calls},
      {"outer_iterations", report.outer_iterations},
      {"per_iteration", iterations},
  };
}

const char* CertificateKindName(verify::CertificateKind kind) {
  switch (kind) {
    case verify::CertificateKind::kOptimal:
      return "optimal";
    case verify::CertificateKind::kSuboptimal:
      return "suboptimal";
    case verify::CertificateKind::kViolatedInvariant:
      return "violated-invariant";
  }
  return "unknown";
}

json ToJson(const verify::Certificate& cert, const GroundSet& ground) {
  json uncovered = json::array();
  for (const auto& [cocircuit, minimum] : cert.uncovered) {
    uncovered.push_back({{"cocircuit", NamesJson(ground, cocircuit)},
                         {"minimum", ground.name(minimum)}});
  }
  json out = {
      {"kind", CertificateKindName(cert.kind)},
      {"message", cert.message},
      {"uncovered", uncovered},
      {"extraneous", NamesJson(ground, cert.extraneous)},
  };
  if (cert.exchange_out >= 0) {
    out["exchange"] = {{"out", ground.name(cert.exchange_out)},
                       {"in", ground.name(cert.exchange_in)}};
  }
  return out;
}

json ToJson(const FlatLattice& lattice, const GroundSet& ground) {
  json by_rank = json::array();
  for (int r = 0; r <= lattice.height(); ++r) {
    json flats = json::array();
    for (int id : lattice.OfRank(r)) {
      flats.push_back(NamesJson(ground, lattice.flat(id)));
    }
    by_rank.push_back({{"rank", r}, {"flats", flats}});
  }
  json coatoms = json::array();
  for (int id : lattice.Coatoms()) {
    coatoms.push_back(NamesJson(ground, lattice.flat(id)));
  }
  return {{"flat_count", lattice.size()},
          {"rank", lattice.height()},
          {"by_rank", by_rank},
          {"coatoms", coatoms}};
}

}  // namespace matroid
