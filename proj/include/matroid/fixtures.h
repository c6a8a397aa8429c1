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

#ifndef MATROID_FIXTURES_H_
#define MATROID_FIXTURES_H_

#include "matroid/io.h"
#include "matroid/representations.h"

namespace matroid::fixtures {

// The running example: 7 vertices, edges e1..e9.
GraphRep Paper9Graph();
// Its incidence matrix with the rows in the published order.
BinaryInstance Paper9Matrix();

// Four edges a..d: a pendant edge a and a triangle {b, c, d}.
GraphRep FigSmallGraph();

// A rank-zero binary matroid of n loops.
BinaryInstance RankZero(int n);

// Columns are the unit vectors: every subset is independent.
BinaryInstance Free(int n);

}  // namespace matroid::fixtures

#endif  // MATROID_FIXTURES_H_
