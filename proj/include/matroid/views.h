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

#ifndef MATROID_VIEWS_H_
#define MATROID_VIEWS_H_

#include <span>
#include <vector>

#include "matroid/oracle.h"
#include "matroid/subset.h"

namespace matroid {

// M/X for an independent X: query(Y) = base.query(X u Y). The domain drops
// X; elements spanned by X stay addressable and behave as loops.
class ContractView : public Oracle {
 public:
  // Spends one round on `base` confirming X is independent. Throws
  // InvalidContractionError otherwise.
  ContractView(Oracle& base, Subset pinned);
  // Views hold a reference to their base; copying would alias it.
  ContractView(const ContractView&) = delete;
  ContractView& operator=(const ContractView&) = delete;

  const GroundSet& ground() const override { return base_.ground(); }
  Subset domain() const override { return domain_; }
  QueryLedger& ledger() override { return base_.ledger(); }
  using Oracle::ledger;
  Subset pinned() const { return pinned_; }

  bool Probe(Subset s) const override { return base_.Probe(s | pinned_); }
  int ProbeRank(Subset s) const override;

 protected:
  std::vector<bool> Evaluate(std::span<const Subset> batch) override;

 private:
  Oracle& base_;
  Subset pinned_;
  Subset domain_;
};

// M\X: the same answers on a smaller domain.
class DeleteView : public Oracle {
 public:
  DeleteView(Oracle& base, Subset removed);
  DeleteView(const DeleteView&) = delete;
  DeleteView& operator=(const DeleteView&) = delete;

  const GroundSet& ground() const override { return base_.ground(); }
  Subset domain() const override { return domain_; }
  QueryLedger& ledger() override { return base_.ledger(); }
  using Oracle::ledger;

  bool Probe(Subset s) const override { return base_.Probe(s); }
  int ProbeRank(Subset s) const override { return base_.ProbeRank(s); }

 protected:
  std::vector<bool> Evaluate(std::span<const Subset> batch) override;

 private:
  Oracle& base_;
  Subset domain_;
};

// M*: Y is independent iff rank(E - Y) = rank(E). Each answer costs greedy
// rank scans on the base, run in lockstep across the batch, so one dual
// round spends up to |E| base rounds. This is a verification tool.
class DualView : public Oracle {
 public:
  // Computes rank(E) on the base (|E| rounds).
  explicit DualView(Oracle& base);
  // Wraps `base` rather than copying it, so DualView(dual) is M**.
  explicit DualView(DualView& base)
      : DualView(static_cast<Oracle&>(base)) {}
  DualView(const DualView&) = delete;
  DualView& operator=(const DualView&) = delete;

  const GroundSet& ground() const override { return base_.ground(); }
  Subset domain() const override { return base_.domain(); }
  QueryLedger& ledger() override { return base_.ledger(); }
  using Oracle::ledger;
  int base_rank() const { return base_rank_; }

  bool Probe(Subset s) const override;
  // rank*(Y) = rank(E - Y) + |Y| - rank(E).
  int ProbeRank(Subset s) const override;

 protected:
  std::vector<bool> Evaluate(std::span<const Subset> batch) override;

 private:
  Oracle& base_;
  int base_rank_ = 0;
};

// Ranks of several sets at once: greedy scans advanced in lockstep, one
// base round per scan step.
std::vector<int> LockstepRanks(Oracle& oracle, std::span<const Subset> sets);

}  // namespace matroid

#endif  // MATROID_VIEWS_H_
