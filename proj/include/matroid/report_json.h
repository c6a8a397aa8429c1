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

#ifndef MATROID_REPORT_JSON_H_
#define MATROID_REPORT_JSON_H_

#include <nlohmann/json.hpp>

#include "matroid/algorithms.h"
#include "matroid/ground_set.h"
#include "matroid/lattice.h"
#include "matroid/verify.h"

namespace matroid {

nlohmann::json NamesJson(const GroundSet& ground, Subset s);

// {solution, weight, rounds, queries, basis_calls, outer_iterations,
//  per_iteration}
nlohmann::json ToJson(const RunReport& report, const GroundSet& ground);
nlohmann::json ToJson(const verify::Certificate& cert,
                      const GroundSet& ground);
nlohmann::json ToJson(const FlatLattice& lattice, const GroundSet& ground);

const char* CertificateKindName(verify::CertificateKind kind);

}  // namespace matroid

#endif  // MATROID_REPORT_JSON_H_
