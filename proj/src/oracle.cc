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

#include "matroid/oracle.h"

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matroid/errors.h"

namespace matroid {

int IndependenceBackend::Rank(Subset s) const {
  Subset basis;
  for (int x : s) {
    if (IsIndependent(basis.With(x))) basis.Insert(x);
  }
  return basis.size();
}

std::vector<bool> Oracle::SubmitRound(std::span<const Subset> batch) {
  if (batch.empty()) {
    throw MalformedQueryError("empty query batch");
  }
  const Subset allowed = domain();
  for (Subset s : batch) {
    if (!s.IsSubsetOf(allowed)) {
      Subset outside = s - allowed;
      throw MalformedQueryError("query names element index " +
                                std::to_string(outside.front()) +
                                " outside the oracle's domain");
    }
  }
  return Evaluate(batch);
}

int Oracle::ProbeRank(Subset s) const {
  Subset basis;
  for (int x : s) {
    if (Probe(basis.With(x))) basis.Insert(x);
  }
  return basis.size();
}

OracleSession::OracleSession(
    GroundSet ground, std::shared_ptr<const IndependenceBackend> backend)
    : ground_(std::move(ground)), backend_(std::move(backend)) {
  if (!backend_) throw DomainError("oracle session without a backend");
  if (backend_->size() != ground_.size()) {
    throw DomainError("backend has " + std::to_string(backend_->size()) +
                      " elements but the ground set has " +
                      std::to_string(ground_.size()));
  }
}

std::vector<bool> OracleSession::Evaluate(std::span<const Subset> batch) {
  // The backend is pure, so the batch could be evaluated in any order or in
  // parallel; the ledger only sees the round as a whole.
  std::vector<bool> answers(batch.size());
  for (size_t i = 0; i < batch.size(); ++i) {
    answers[i] = backend_->IsIndependent(batch[i]);
  }
  ledger_.ChargeRound(static_cast<long>(batch.size()));
  return answers;
}

}  // namespace matroid
