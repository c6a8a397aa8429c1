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

#include "matroid/fixtures.h"

#include <cstdint>
#include <string>
#include <vector>

namespace matroid::fixtures {

GraphRep Paper9Graph() {
  // Vertices are numbered by the rows of the published incidence matrix.
  GraphRep g;
  g.vertex_count = 7;
  g.edges = {{0, 1, "e1"}, {2, 4, "e2"}, {3, 6, "e3"},
             {3, 5, "e4"}, {5, 6, "e5"}, {0, 3, "e6"},
             {3, 4, "e7"}, {2, 3, "e8"}, {1, 2, "e9"}};
  return g;
}

BinaryInstance Paper9Matrix() {
  return {GroundSet::Numbered(9), BinaryRep::FromRows({
                                      {1, 0, 0, 0, 0, 1, 0, 0, 0},
                                      {1, 0, 0, 0, 0, 0, 0, 0, 1},
                                      {0, 1, 0, 0, 0, 0, 0, 1, 1},
                                      {0, 0, 1, 1, 0, 1, 1, 1, 0},
                                      {0, 1, 0, 0, 0, 0, 1, 0, 0},
                                      {0, 0, 0, 1, 1, 0, 0, 0, 0},
                                      {0, 0, 1, 0, 1, 0, 0, 0, 0},
                                  })};
}

GraphRep FigSmallGraph() {
  GraphRep g;
  g.vertex_count = 4;
  g.edges = {{0, 1, "a"}, {1, 2, "b"}, {2, 3, "c"}, {1, 3, "d"}};
  return g;
}

BinaryInstance RankZero(int n) {
  return {GroundSet::Numbered(n), BinaryRep(1, std::vector<uint64_t>(n, 0))};
}

BinaryInstance Free(int n) {
  std::vector<uint64_t> columns;
  for (int i = 0; i < n; ++i) columns.push_back(uint64_t{1} << i);
  return {GroundSet::Numbered(n), BinaryRep(n, std::move(columns))};
}

}  // namespace matroid::fixtures
