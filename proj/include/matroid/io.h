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

#ifndef MATROID_IO_H_
#define MATROID_IO_H_

#include <istream>
#include <ostream>
#include <string>

#include "matroid/ground_set.h"
#include "matroid/representations.h"

namespace matroid {

// Binary matroid file: a line `r n`, then r rows of n space-separated bits.
// A comment `# names: e1 e2 ...` names the columns (default e1..en); other
// `#` lines are ignored.
struct BinaryInstance {
  GroundSet ground;
  BinaryRep rep;
};

BinaryInstance ParseBinaryMatroid(std::istream& in);
void WriteBinaryMatroid(const BinaryInstance& instance, std::ostream& out);

// Graph file: a line `V E`, then E lines `u v name`.
GraphRep ParseGraph(std::istream& in);
void WriteGraph(const GraphRep& g, std::ostream& out);

// Uniform matroid: `uniform n r`.
struct UniformSpec {
  int n = 0;
  int r = 0;
};

UniformSpec ParseUniform(std::istream& in);
// "n,r" as given on the command line.
UniformSpec ParseUniformSpec(const std::string& text);
void WriteUniform(const UniformSpec& spec, std::ostream& out);

// Throws ParseError if the file cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace matroid

#endif  // MATROID_IO_H_
