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

#ifndef MATROID_ORACLE_H_
#define MATROID_ORACLE_H_

#include <memory>
#include <span>
#include <vector>

#include "matroid/ground_set.h"
#include "matroid/subset.h"

namespace matroid {

// Adaptive-round accounting for one algorithm run.
struct QueryLedger {
  long rounds = 0;
  long queries = 0;
  long basis_calls = 0;
  std::vector<long> per_round_sizes;

  void ChargeRound(long batch_size) {
    ++rounds;
    queries += batch_size;
    per_round_sizes.push_back(batch_size);
  }
};

// A pure independence predicate over subsets of {0, ..., size()-1}.
class IndependenceBackend {
 public:
  virtual ~IndependenceBackend() = default;
  virtual int size() const = 0;
  virtual bool IsIndependent(Subset s) const = 0;
  // Size of a largest independent subset. The default is a greedy scan.
  virtual int Rank(Subset s) const;
};

// The query interface every algorithm drives: batches of independence
// queries, one adaptive round per batch. Sessions and views both implement
// it; views forward to their base so the whole stack shares one ledger.
class Oracle {
 public:
  virtual ~Oracle() = default;

  virtual const GroundSet& ground() const = 0;
  // Elements that may appear in queries.
  virtual Subset domain() const = 0;
  virtual QueryLedger& ledger() = 0;
  const QueryLedger& ledger() const {
    return const_cast<Oracle*>(this)->ledger();
  }

  // Answers every query of `batch` positionally as one adaptive round.
  // Throws MalformedQueryError on an empty batch or on a subset leaving
  // domain().
  std::vector<bool> SubmitRound(std::span<const Subset> batch);
  std::vector<bool> SubmitRound(std::initializer_list<Subset> batch) {
    return SubmitRound(std::span<const Subset>(batch.begin(), batch.size()));
  }
  bool SubmitSingle(Subset s) { return SubmitRound({s}).front(); }

  // Unmetered evaluation, reserved for brute-force verification outside the
  // query model. Callers stay within domain().
  virtual bool Probe(Subset s) const = 0;
  virtual int ProbeRank(Subset s) const;

 protected:
  virtual std::vector<bool> Evaluate(std::span<const Subset> batch) = 0;
};

// The root oracle: a backend, its element names, and the ledger.
class OracleSession : public Oracle {
 public:
  OracleSession(GroundSet ground,
                std::shared_ptr<const IndependenceBackend> backend);

  const GroundSet& ground() const override { return ground_; }
  Subset domain() const override { return ground_.all(); }
  QueryLedger& ledger() override { return ledger_; }
  using Oracle::ledger;
  void ResetLedger() { ledger_ = {}; }

  const IndependenceBackend& backend() const { return *backend_; }
  std::shared_ptr<const IndependenceBackend> shared_backend() const {
    return backend_;
  }

  bool Probe(Subset s) const override { return backend_->IsIndependent(s); }
  int ProbeRank(Subset s) const override { return backend_->Rank(s); }

 protected:
  std::vector<bool> Evaluate(std::span<const Subset> batch) override;

 private:
  GroundSet ground_;
  std::shared_ptr<const IndependenceBackend> backend_;
  QueryLedger ledger_;
};

}  // namespace matroid

#endif  // MATROID_ORACLE_H_
