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

#ifndef MATROID_REPRESENTATIONS_H_
#define MATROID_REPRESENTATIONS_H_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "matroid/ground_set.h"
#include "matroid/oracle.h"
#include "matroid/subset.h"

namespace matroid {

// A matrix over GF(2) whose columns represent the elements. Column j is
// stored as a bitmask over rows, so at most 64 rows are supported.
class BinaryRep : public IndependenceBackend {
 public:
  BinaryRep() = default;
  BinaryRep(int rows, std::vector<uint64_t> columns);
  // `matrix[r][c]` in {0, 1}.
  static BinaryRep FromRows(const std::vector<std::vector<int>>& matrix);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  int size() const override { return cols(); }
  uint64_t column(int j) const { return columns_.at(j); }
  bool bit(int row, int col) const { return (columns_.at(col) >> row) & 1; }

  // Linear independence of the columns of `s`, by elimination.
  bool IsIndependent(Subset s) const override;
  int Rank(Subset s) const override;

 private:
  int rows_ = 0;
  std::vector<uint64_t> columns_;
};

struct Edge {
  int u = 0;
  int v = 0;
  std::string name;
};

// A multigraph; self-loops are allowed and become matroid loops.
struct GraphRep {
  int vertex_count = 0;
  std::vector<Edge> edges;

  GroundSet Ground() const;
};

// Vertex-edge incidence matrix over GF(2): one row per vertex, edge (u, v)
// has ones at rows u and v, a self-loop is the zero column.
BinaryRep GraphicToBinary(const GraphRep& g);

// U^r_n: a subset is independent iff it has at most r elements.
class UniformRep : public IndependenceBackend {
 public:
  // Throws DomainError unless 0 <= r <= n <= kMaxElements.
  UniformRep(int n, int r);

  int size() const override { return n_; }
  int rank_bound() const { return r_; }
  bool IsIndependent(Subset s) const override { return s.size() <= r_; }
  int Rank(Subset s) const override { return std::min(s.size(), r_); }

 private:
  int n_;
  int r_;
};

OracleSession MakeSession(GroundSet ground, BinaryRep rep);
OracleSession MakeSession(const GraphRep& g);
OracleSession MakeUniformSession(int n, int r);

}  // namespace matroid

#endif  // MATROID_REPRESENTATIONS_H_
