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

#include "matroid/representations.h"

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "matroid/errors.h"

namespace matroid {
namespace {

// Inserts `v` into a GF(2) echelon basis keyed by leading bit. Returns false
// when `v` reduces to zero.
bool Insert(uint64_t v, uint64_t (&basis)[64]) {
  while (v != 0) {
    int lead = 63 - std::countl_zero(v);
    if (basis[lead] == 0) {
      basis[lead] = v;
      return true;
    }
    v ^= basis[lead];
  }
  return false;
}

}  // namespace

BinaryRep::BinaryRep(int rows, std::vector<uint64_t> columns)
    : rows_(rows), columns_(std::move(columns)) {
  if (rows_ < 0 || rows_ > 64) {
    throw DomainError("binary representation supports 0..64 rows");
  }
  if (columns_.size() > static_cast<size_t>(kMaxElements)) {
    throw DomainError("binary representation supports at most 64 columns");
  }
  const uint64_t mask = rows_ == 64 ? ~uint64_t{0} : (uint64_t{1} << rows_) - 1;
  for (uint64_t c : columns_) {
    if (c & ~mask) throw DomainError("column has bits beyond the row count");
  }
}

BinaryRep BinaryRep::FromRows(const std::vector<std::vector<int>>& matrix) {
  const int rows = static_cast<int>(matrix.size());
  const size_t cols = rows == 0 ? 0 : matrix[0].size();
  std::vector<uint64_t> columns(cols, 0);
  for (int r = 0; r < rows; ++r) {
    if (matrix[r].size() != cols) throw DomainError("ragged matrix");
    for (size_t c = 0; c < cols; ++c) {
      if (matrix[r][c] != 0 && matrix[r][c] != 1) {
        throw DomainError("matrix entries must be 0 or 1");
      }
      if (matrix[r][c]) columns[c] |= uint64_t{1} << r;
    }
  }
  return BinaryRep(rows, std::move(columns));
}

bool BinaryRep::IsIndependent(Subset s) const {
  if (s.size() > rows_) return false;
  uint64_t basis[64] = {};
  for (int j : s) {
    if (!Insert(columns_.at(j), basis)) return false;
  }
  return true;
}

int BinaryRep::Rank(Subset s) const {
  uint64_t basis[64] = {};
  int rank = 0;
  for (int j : s) rank += Insert(columns_.at(j), basis);
  return rank;
}

GroundSet GraphRep::Ground() const {
  std::vector<std::string> names;
  for (const Edge& e : edges) names.push_back(e.name);
  return GroundSet(std::move(names));
}

BinaryRep GraphicToBinary(const GraphRep& g) {
  std::vector<uint64_t> columns;
  for (const Edge& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count ||
        e.v >= g.vertex_count) {
      throw DomainError("edge '" + e.name + "' has an endpoint out of range");
    }
    // A self-loop cancels to the zero column.
    columns.push_back((uint64_t{1} << e.u) ^ (uint64_t{1} << e.v));
  }
  return BinaryRep(g.vertex_count, std::move(columns));
}

UniformRep::UniformRep(int n, int r) : n_(n), r_(r) {
  if (n < 0 || n > kMaxElements || r < 0 || r > n) {
    throw DomainError("uniform matroid needs 0 <= r <= n <= 64");
  }
}

OracleSession MakeSession(GroundSet ground, BinaryRep rep) {
  return OracleSession(std::move(ground),
                       std::make_shared<BinaryRep>(std::move(rep)));
}

OracleSession MakeSession(const GraphRep& g) {
  return MakeSession(g.Ground(), GraphicToBinary(g));
}

OracleSession MakeUniformSession(int n, int r) {
  return OracleSession(GroundSet::Lettered(n),
                       std::make_shared<UniformRep>(n, r));
}

}  // namespace matroid
