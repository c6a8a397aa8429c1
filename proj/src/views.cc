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

#include "matroid/views.h"

#include <span>
#include <vector>

#include "matroid/errors.h"

namespace matroid {

std::vector<int> LockstepRanks(Oracle& oracle, std::span<const Subset> sets) {
  std::vector<Subset> basis(sets.size());
  std::vector<Subset> pending(sets.begin(), sets.end());
  while (true) {
    std::vector<Subset> batch;
    std::vector<size_t> owner;
    for (size_t k = 0; k < pending.size(); ++k) {
      if (pending[k].empty()) continue;
      batch.push_back(basis[k].With(pending[k].front()));
      owner.push_back(k);
    }
    if (batch.empty()) break;
    std::vector<bool> answers = oracle.SubmitRound(batch);
    for (size_t q = 0; q < batch.size(); ++q) {
      size_t k = owner[q];
      int x = pending[k].front();
      pending[k].Erase(x);
      if (answers[q]) basis[k].Insert(x);
    }
  }
  std::vector<int> ranks;
  for (Subset b : basis) ranks.push_back(b.size());
  return ranks;
}

ContractView::ContractView(Oracle& base, Subset pinned)
    : base_(base), pinned_(pinned), domain_(base.domain() - pinned) {
  if (!base_.SubmitSingle(pinned_)) {
    throw InvalidContractionError(
        "contraction set " + base_.ground().Format(pinned_) +
        " is dependent");
  }
}

int ContractView::ProbeRank(Subset s) const {
  return base_.ProbeRank(s | pinned_) - pinned_.size();
}

std::vector<bool> ContractView::Evaluate(std::span<const Subset> batch) {
  std::vector<Subset> lifted;
  lifted.reserve(batch.size());
  for (Subset y : batch) lifted.push_back(y | pinned_);
  return base_.SubmitRound(lifted);
}

DeleteView::DeleteView(Oracle& base, Subset removed)
    : base_(base), domain_(base.domain() - removed) {}

std::vector<bool> DeleteView::Evaluate(std::span<const Subset> batch) {
  return base_.SubmitRound(batch);
}

DualView::DualView(Oracle& base) : base_(base) {
  const Subset all = base_.domain();
  base_rank_ = LockstepRanks(base_, std::span<const Subset>(&all, 1)).front();
}

bool DualView::Probe(Subset s) const {
  return base_.ProbeRank(base_.domain() - s) == base_rank_;
}

int DualView::ProbeRank(Subset s) const {
  return base_.ProbeRank(base_.domain() - s) + s.size() - base_rank_;
}

std::vector<bool> DualView::Evaluate(std::span<const Subset> batch) {
  std::vector<Subset> complements;
  complements.reserve(batch.size());
  for (Subset y : batch) complements.push_back(base_.domain() - y);
  std::vector<int> ranks = LockstepRanks(base_, complements);
  std::vector<bool> answers(batch.size());
  for (size_t i = 0; i < batch.size(); ++i) {
    answers[i] = ranks[i] == base_rank_;
  }
  return answers;
}

}  // namespace matroid
