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

#include "matroid/io.h"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matroid/errors.h"

namespace matroid {
namespace {

// Reads non-comment lines, keeping `# names:` headers aside.
struct Lines {
  std::vector<std::string> data;
  std::vector<std::string> names;
};

Lines ReadLines(std::istream& in) {
  Lines out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream header(line.substr(first + 1));
      std::string tag;
      if (header >> tag && tag == "names:") {
        std::string name;
        while (header >> name) out.names.push_back(name);
      }
      continue;
    }
    out.data.push_back(line);
  }
  return out;
}

template <typename... Ts>
void ReadFields(const std::string& line, const char* what, Ts&... fields) {
  std::istringstream in(line);
  if (!((in >> fields) && ...)) {
    throw ParseError(std::string("malformed ") + what + ": '" + line + "'");
  }
  std::string extra;
  if (in >> extra) {
    throw ParseError(std::string("trailing data in ") + what + ": '" + line +
                     "'");
  }
}

}  // namespace

BinaryInstance ParseBinaryMatroid(std::istream& in) {
  Lines lines = ReadLines(in);
  if (lines.data.empty()) throw ParseError("empty binary matroid file");
  int rows = 0;
  int cols = 0;
  ReadFields(lines.data[0], "header `r n`", rows, cols);
  if (rows < 0 || cols < 0 || rows > 64 || cols > kMaxElements) {
    throw ParseError("matrix dimensions out of range (at most 64 x 64)");
  }
  if (static_cast<int>(lines.data.size()) != rows + 1) {
    throw ParseError("expected " + std::to_string(rows) + " matrix rows, got " +
                     std::to_string(lines.data.size() - 1));
  }
  std::vector<std::vector<int>> matrix;
  for (int r = 0; r < rows; ++r) {
    std::istringstream row(lines.data[r + 1]);
    std::vector<int> bits;
    std::string token;
    while (row >> token) {
      if (token != "0" && token != "1") {
        throw ParseError("matrix entry '" + token + "' is not a bit");
      }
      bits.push_back(token == "1");
    }
    if (static_cast<int>(bits.size()) != cols) {
      throw ParseError("row " + std::to_string(r + 1) + " has " +
                       std::to_string(bits.size()) + " entries, expected " +
                       std::to_string(cols));
    }
    matrix.push_back(std::move(bits));
  }
  std::vector<uint64_t> columns(cols, 0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (matrix[r][c]) columns[c] |= uint64_t{1} << r;
    }
  }
  BinaryInstance instance;
  if (lines.names.empty()) {
    instance.ground = GroundSet::Numbered(cols);
  } else {
    if (static_cast<int>(lines.names.size()) != cols) {
      throw ParseError("names header lists " +
                       std::to_string(lines.names.size()) +
                       " names for " + std::to_string(cols) + " columns");
    }
    try {
      instance.ground = GroundSet(lines.names);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  instance.rep = BinaryRep(rows, std::move(columns));
  return instance;
}

void WriteBinaryMatroid(const BinaryInstance& instance, std::ostream& out) {
  const BinaryRep& rep = instance.rep;
  out << rep.rows() << ' ' << rep.cols() << '\n';
  if (instance.ground.names() != GroundSet::Numbered(rep.cols()).names()) {
    out << "# names:";
    for (const std::string& name : instance.ground.names()) out << ' ' << name;
    out << '\n';
  }
  for (int r = 0; r < rep.rows(); ++r) {
    for (int c = 0; c < rep.cols(); ++c) {
      out << (c ? " " : "") << (rep.bit(r, c) ? 1 : 0);
    }
    out << '\n';
  }
}

GraphRep ParseGraph(std::istream& in) {
  Lines lines = ReadLines(in);
  if (lines.data.empty()) throw ParseError("empty graph file");
  GraphRep g;
  int edge_count = 0;
  ReadFields(lines.data[0], "header `V E`", g.vertex_count, edge_count);
  if (g.vertex_count < 0 || g.vertex_count > 64 || edge_count < 0 ||
      edge_count > kMaxElements) {
    throw ParseError("graph size out of range (at most 64 vertices/edges)");
  }
  if (static_cast<int>(lines.data.size()) != edge_count + 1) {
    throw ParseError("expected " + std::to_string(edge_count) +
                     " edge lines, got " +
                     std::to_string(lines.data.size() - 1));
  }
  for (int e = 0; e < edge_count; ++e) {
    Edge edge;
    ReadFields(lines.data[e + 1], "edge `u v name`", edge.u, edge.v, edge.name);
    if (edge.u < 0 || edge.v < 0 || edge.u >= g.vertex_count ||
        edge.v >= g.vertex_count) {
      throw ParseError("edge '" + edge.name + "' has an endpoint out of range");
    }
    g.edges.push_back(std::move(edge));
  }
  try {
    g.Ground();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return g;
}

void WriteGraph(const GraphRep& g, std::ostream& out) {
  out << g.vertex_count << ' ' << g.edges.size() << '\n';
  for (const Edge& e : g.edges) {
    out << e.u << ' ' << e.v << ' ' << e.name << '\n';
  }
}

UniformSpec ParseUniform(std::istream& in) {
  Lines lines = ReadLines(in);
  if (lines.data.size() != 1) throw ParseError("expected `uniform n r`");
  std::string tag;
  UniformSpec spec;
  ReadFields(lines.data[0], "uniform spec", tag, spec.n, spec.r);
  if (tag != "uniform") throw ParseError("expected `uniform n r`");
  if (spec.n < 0 || spec.n > kMaxElements || spec.r < 0 || spec.r > spec.n) {
    throw ParseError("uniform matroid needs 0 <= r <= n <= 64");
  }
  return spec;
}

UniformSpec ParseUniformSpec(const std::string& text) {
  const size_t comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected `n,r`");
  std::string rewritten = "uniform " + text.substr(0, comma) + " " +
                          text.substr(comma + 1);
  std::istringstream in(rewritten);
  return ParseUniform(in);
}

void WriteUniform(const UniformSpec& spec, std::ostream& out) {
  out << "uniform " << spec.n << ' ' << spec.r << '\n';
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

}  // namespace matroid
