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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "matroid/algorithms.h"
#include "matroid/derived.h"
#include "matroid/errors.h"
#include "matroid/fixtures.h"
#include "matroid/io.h"
#include "matroid/lattice.h"
#include "matroid/report_json.h"
#include "matroid/representations.h"
#include "matroid/verify.h"
#include "matroid/weights.h"

namespace matroid::cli {
namespace {

using nlohmann::json;

// A failure carrying its process exit code.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct Options {
  uint64_t seed = 1;
  bool json = false;
  int max_n = 0;  // 0 keeps the built-in guards

  std::string matrix;
  std::string graph;
  std::string uniform;
  std::string weights;

  std::string algo = "reduction-kuw";
  bool certify = false;

  std::string checks = "axioms,white,duality";
  std::string solution;

  std::vector<std::string> gen_args;
  std::string out_dir;
  std::string stem;
  bool allow_rank_zero = false;

  std::string emit_dot;
};

struct Instance {
  std::string kind;  // "matrix", "graph" or "uniform"
  std::optional<GraphRep> graph;
  std::unique_ptr<OracleSession> session;

  const GroundSet& ground() const { return session->ground(); }
};

int Guard(const Options& opts, int fallback) {
  return opts.max_n > 0 ? opts.max_n : fallback;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

Instance LoadInstance(const Options& opts) {
  const int sources = !opts.matrix.empty() + !opts.graph.empty() +
                      !opts.uniform.empty();
  if (sources != 1) {
    throw CliError(kExitMalformed,
                   "exactly one of --matrix, --graph, --uniform is required");
  }
  Instance inst;
  if (!opts.matrix.empty()) {
    std::istringstream in(ReadFile(opts.matrix));
    BinaryInstance parsed = ParseBinaryMatroid(in);
    inst.kind = "matrix";
    inst.session = std::make_unique<OracleSession>(
        MakeSession(std::move(parsed.ground), std::move(parsed.rep)));
  } else if (!opts.graph.empty()) {
    std::istringstream in(ReadFile(opts.graph));
    inst.kind = "graph";
    inst.graph = ParseGraph(in);
    inst.session = std::make_unique<OracleSession>(MakeSession(*inst.graph));
  } else {
    UniformSpec spec;
    if (std::filesystem::is_regular_file(opts.uniform)) {
      std::istringstream in(ReadFile(opts.uniform));
      spec = ParseUniform(in);
    } else {
      spec = ParseUniformSpec(opts.uniform);
    }
    inst.kind = "uniform";
    inst.session =
        std::make_unique<OracleSession>(MakeUniformSession(spec.n, spec.r));
  }
  return inst;
}

WeightMap LoadWeights(const Options& opts, const GroundSet& ground) {
  if (opts.weights.empty()) return WeightMap::Ascending(ground.size());
  const NamedWeights named = ReadWeightsFile(opts.weights);
  try {
    WeightMap w = WeightMap::FromNamed(ground, named);
    const WeightValidation validation = ValidateWeights(named, ground);
    if (!validation.ok()) {
      std::string pairs;
      for (const auto& [a, b] : validation.duplicates) {
        pairs += (pairs.empty() ? "" : ", ") + a + "=" + b;
      }
      throw CliError(kExitBadWeights, "weights are not distinct: " + pairs);
    }
    return w;
  } catch (const IncompleteWeightsError& e) {
    throw CliError(kExitBadWeights, e.what());
  } catch (const DomainError& e) {
    throw CliError(kExitBadWeights, e.what());
  }
}

// Human rendering of a JSON report.
void PrintTable(const json& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      PrintTable(value, out, indent + 2);
    } else if (value.is_array() &&
               std::all_of(value.begin(), value.end(),
                           [](const json& v) { return v.is_string(); })) {
      out << pad << key << ": {";
      for (size_t i = 0; i < value.size(); ++i) {
        out << (i ? "," : "") << value[i].get<std::string>();
      }
      out << "}\n";
    } else if (value.is_string()) {
      out << pad << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << pad << key << ": " << value.dump() << '\n';
    }
  }
}

void Emit(const json& report, const Options& opts, bool tty,
          std::ostream& out) {
  if (opts.json || !tty) {
    out << report.dump(2) << '\n';
  } else {
    PrintTable(report, out);
  }
}

int KuwRoundBound(int n) {
  int k = 0;
  while (k * k < n) ++k;
  return 2 * k + 2;
}

int CmdSolve(const Options& opts, bool tty, std::ostream& out) {
  Instance inst = LoadInstance(opts);
  const WeightMap w = LoadWeights(opts, inst.ground());
  RunReport report;
  if (opts.algo == "greedy") {
    report = Greedy(*inst.session, w);
  } else if (opts.algo == "boruvka") {
    if (!inst.graph) {
      throw CliError(kExitMismatch, "boruvka needs a --graph instance");
    }
    report = Boruvka(*inst.graph, w);
  } else {
    try {
      report = OptimizeBinary(*inst.session, w);
    } catch (const InvalidContractionError& e) {
      throw CliError(kExitViolation, std::string(e.what()) +
                                         " (the instance is not binary)");
    } catch (const FaultyOracleError& e) {
      throw CliError(kExitViolation, e.what());
    }
  }
  json j = ToJson(report, inst.ground());
  j["instance"] = inst.kind;
  j["seed"] = opts.seed;
  if (opts.certify) {
    const verify::Certificate cert = verify::CheckCocircuitCertificate(
        *inst.session, w, report.solution, Guard(opts, kMaxLatticeElements));
    j["certificate"] = ToJson(cert, inst.ground());
  }
  Emit(j, opts, tty, out);
  return kExitOk;
}

json IntervalJson(const std::optional<FlatInterval>& interval,
                  const FlatLattice& lattice, const GroundSet& ground) {
  if (!interval) return nullptr;
  return {{"lower", NamesJson(ground, lattice.flat(interval->lower))},
          {"upper", NamesJson(ground, lattice.flat(interval->upper))},
          {"size", interval->size}};
}

int CmdVerify(const Options& opts, bool tty, std::ostream& out) {
  static const std::vector<std::string> kKnown = {
      "certificate", "white",  "tutte",
      "duality",     "axioms", "lattice-geometric"};
  const std::vector<std::string> checks = SplitList(opts.checks);
  if (checks.empty()) throw CliError(kExitMalformed, "no checks selected");
  for (const std::string& c : checks) {
    if (std::find(kKnown.begin(), kKnown.end(), c) == kKnown.end()) {
      throw CliError(kExitMalformed, "unknown check '" + c + "'");
    }
  }
  Instance inst = LoadInstance(opts);
  const Oracle& oracle = *inst.session;
  const GroundSet& ground = inst.ground();
  json results = json::object();
  bool all_ok = true;
  for (const std::string& check : checks) {
    json r;
    if (check == "certificate") {
      if (opts.solution.empty()) {
        throw CliError(kExitMalformed, "certificate check needs --solution");
      }
      const WeightMap w = LoadWeights(opts, ground);
      const Subset x = ground.Parse(SplitList(opts.solution));
      const verify::Certificate cert = verify::CheckCocircuitCertificate(
          oracle, w, x, Guard(opts, kMaxLatticeElements));
      r = ToJson(cert, ground);
      r["ok"] = cert.kind == verify::CertificateKind::kOptimal;
    } else if (check == "white") {
      const verify::WhiteResult white =
          verify::CheckWhite(oracle, Guard(opts, kMaxLatticeElements));
      r["ok"] = white.ok;
      if (!white.ok) {
        r["counterexample"] = {
            NamesJson(ground, white.first), NamesJson(ground, white.second)};
        r["symmetric_difference"] =
            NamesJson(ground, white.first ^ white.second);
      }
    } else if (check == "tutte") {
      const int guard = Guard(opts, 10);
      const verify::TutteWhiteResult tw =
          verify::CheckTutteWhiteAgreement(oracle, guard);
      r["ok"] = tw.agree;
      r["white_ok"] = tw.white_ok;
      r["primal_u42_interval"] = IntervalJson(
          tw.primal_interval, FlatLattice::BuildProbed(oracle, guard), ground);
      r["dual_u42_interval"] =
          IntervalJson(tw.dual_interval,
                       FlatLattice::FromTable(verify::DualTable(oracle, guard)),
                       ground);
    } else if (check == "duality") {
      const verify::DualityResult d =
          verify::CheckDualityLemmas(oracle, Guard(opts, 10));
      r["ok"] = d.ok;
      if (!d.ok) r["violation"] = d.violation;
    } else if (check == "axioms") {
      const verify::AxiomResult a =
          verify::CheckAxioms(oracle, Guard(opts, kMaxLatticeElements));
      r["ok"] = a.ok;
      if (!a.ok) {
        r["axiom"] = a.axiom;
        r["witness"] = {NamesJson(ground, a.first),
                        NamesJson(ground, a.second)};
      }
    } else {
      r["ok"] = IsGeometric(
          FlatLattice::BuildProbed(oracle, Guard(opts, kMaxLatticeElements)));
    }
    all_ok = all_ok && r["ok"].get<bool>();
    results[check] = r;
  }
  Emit({{"ok", all_ok}, {"instance", inst.kind}, {"checks", results}}, opts,
       tty, out);
  return all_ok ? kExitOk : kExitViolation;
}

int CmdLattice(const Options& opts, bool tty, std::ostream& out) {
  Instance inst = LoadInstance(opts);
  const FlatLattice lattice =
      FlatLattice::Build(*inst.session, Guard(opts, kMaxLatticeElements));
  if (opts.emit_dot == "-") {
    WriteDot(lattice, inst.ground(), out);
    return kExitOk;
  }
  json j = ToJson(lattice, inst.ground());
  j["rounds"] = inst.session->ledger().rounds;
  if (!opts.emit_dot.empty()) {
    std::ofstream dot(opts.emit_dot);
    if (!dot) throw CliError(kExitMalformed, "cannot write " + opts.emit_dot);
    WriteDot(lattice, inst.ground(), dot);
    j["dot"] = opts.emit_dot;
  }
  Emit(j, opts, tty, out);
  return kExitOk;
}

int CmdBasis(const Options& opts, bool tty, std::ostream& out) {
  Instance inst = LoadInstance(opts);
  KuwOptions kuw;
  kuw.check_invariant = true;
  const Subset basis = KuwBasisSearch(*inst.session, kuw);
  const QueryLedger& ledger = inst.session->ledger();
  json sizes = ledger.per_round_sizes;
  Emit({{"basis", NamesJson(inst.ground(), basis)},
        {"rank", basis.size()},
        {"rounds", ledger.rounds},
        {"queries", ledger.queries},
        {"round_bound", KuwRoundBound(inst.ground().size())},
        {"per_round_sizes", sizes},
        {"instance", inst.kind}},
       opts, tty, out);
  return kExitOk;
}

// A generated instance: file text, its extension, and optional weights.
struct Generated {
  std::string stem;
  std::string extension;
  std::string text;
  std::string weights;
};

std::string WeightsText(const GroundSet& ground, const std::vector<int>& w) {
  std::ostringstream out;
  for (int i = 0; i < ground.size(); ++i) {
    out << ground.name(i) << ' ' << w[i] << '\n';
  }
  return out.str();
}

std::vector<int> AscendingWeights(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

int ParseCount(const std::string& text, const char* what) {
  try {
    size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw CliError(kExitMalformed,
                 std::string("expected an integer for ") + what + ", got '" +
                     text + "'");
}

Generated GenRandomBinary(const Options& opts, std::mt19937_64& rng) {
  if (opts.gen_args.size() != 3) {
    throw CliError(kExitMalformed, "usage: gen random-binary R N");
  }
  const int r = ParseCount(opts.gen_args[1], "R");
  const int n = ParseCount(opts.gen_args[2], "N");
  if (r < 0 || n < 1 || r > n || n > kMaxElements) {
    throw CliError(kExitMalformed, "random-binary needs 0 <= R <= N <= 64");
  }
  if (r == 0 && !opts.allow_rank_zero) {
    throw CliError(kExitMalformed,
                   "R = 0 only yields rank 0; pass --allow-rank-zero");
  }
  BinaryRep rep;
  const uint64_t mask = r >= 64 ? ~uint64_t{0} : (uint64_t{1} << r) - 1;
  do {
    std::vector<uint64_t> columns(n);
    for (uint64_t& c : columns) c = rng() & mask;
    rep = BinaryRep(r, std::move(columns));
  } while (!opts.allow_rank_zero && rep.Rank(Subset::Full(n)) == 0);
  std::vector<int> w = AscendingWeights(n);
  std::shuffle(w.begin(), w.end(), rng);
  BinaryInstance instance{GroundSet::Numbered(n), rep};
  std::ostringstream text;
  WriteBinaryMatroid(instance, text);
  return {"random-binary", "bm", text.str(), WeightsText(instance.ground, w)};
}

bool Connected(int vertices, const std::vector<Edge>& edges) {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertices;
  for (const Edge& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components <= 1;
}

Generated GenRandomGraph(const Options& opts, std::mt19937_64& rng) {
  if (opts.gen_args.size() != 3) {
    throw CliError(kExitMalformed, "usage: gen random-graph V E");
  }
  const int v = ParseCount(opts.gen_args[1], "V");
  const int e = ParseCount(opts.gen_args[2], "E");
  if (v < 1 || v > 64 || e < v - 1 || e > v * (v - 1) / 2 ||
      e > kMaxElements) {
    throw CliError(kExitMalformed,
                   "random-graph needs 1 <= V <= 64 and V-1 <= E <= "
                   "min(V(V-1)/2, 64) for a connected simple graph");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
  }
  GraphRep g;
  g.vertex_count = v;
  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    g.edges.clear();
    for (int i = 0; i < e; ++i) {
      g.edges.push_back(
          {pairs[i].first, pairs[i].second, "e" + std::to_string(i + 1)});
    }
    if (Connected(v, g.edges)) break;
    if (attempt + 1 == kAttempts) {
      throw CliError(kExitMalformed, "no connected graph found; raise E");
    }
  }
  std::vector<int> w = AscendingWeights(e);
  std::shuffle(w.begin(), w.end(), rng);
  std::ostringstream text;
  WriteGraph(g, text);
  return {"random-graph", "graph", text.str(), WeightsText(g.Ground(), w)};
}

Generated GenFixture(const Options& opts) {
  if (opts.gen_args.size() != 2) {
    throw CliError(kExitMalformed,
                   "usage: gen fixture paper9|paper9-graph|fig-small|u42|"
                   "kuw-remark");
  }
  const std::string& name = opts.gen_args[1];
  std::ostringstream text;
  if (name == "paper9") {
    const BinaryInstance instance = fixtures::Paper9Matrix();
    WriteBinaryMatroid(instance, text);
    return {name, "bm", text.str(),
            WeightsText(instance.ground, AscendingWeights(9))};
  }
  if (name == "paper9-graph" || name == "fig-small") {
    const GraphRep g = name == "paper9-graph" ? fixtures::Paper9Graph()
                                              : fixtures::FigSmallGraph();
    WriteGraph(g, text);
    return {name, "graph", text.str(),
            WeightsText(g.Ground(),
                        AscendingWeights(static_cast<int>(g.edges.size())))};
  }
  if (name == "u42") {
    WriteUniform({4, 2}, text);
    return {name, "uniform", text.str(),
            WeightsText(GroundSet::Lettered(4), AscendingWeights(4))};
  }
  if (name == "kuw-remark") {
    const verify::KuwRemarkFixture f = verify::KuwSortedCounterexample();
    text << "# kuw-blocks:";
    for (Subset block : f.blocks) text << ' ' << f.ground.Format(block);
    text << '\n';
    WriteBinaryMatroid({f.ground, f.rep}, text);
    std::vector<int> w;
    for (double x : f.weights.values()) w.push_back(static_cast<int>(x));
    return {name, "bm", text.str(), WeightsText(f.ground, w)};
  }
  throw CliError(kExitMalformed, "unknown fixture '" + name + "'");
}

int CmdGen(const Options& opts, bool tty, std::ostream& out) {
  if (opts.gen_args.empty()) {
    throw CliError(kExitMalformed,
                   "usage: gen random-binary R N | random-graph V E | "
                   "fixture NAME");
  }
  std::mt19937_64 rng(opts.seed);
  const std::string& kind = opts.gen_args[0];
  Generated gen;
  if (kind == "random-binary") {
    gen = GenRandomBinary(opts, rng);
  } else if (kind == "random-graph") {
    gen = GenRandomGraph(opts, rng);
  } else if (kind == "fixture") {
    gen = GenFixture(opts);
  } else {
    throw CliError(kExitMalformed, "unknown generator '" + kind + "'");
  }
  if (opts.out_dir.empty()) {
    out << gen.text;
    return kExitOk;
  }
  const std::filesystem::path dir(opts.out_dir);
  std::filesystem::create_directories(dir);
  const std::string stem = opts.stem.empty() ? gen.stem : opts.stem;
  json files = json::array();
  auto write = [&files](const std::filesystem::path& path,
                        const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw CliError(kExitMalformed, "cannot write " + path.string());
    file << contents;
    files.push_back(path.string());
  };
  write(dir / (stem + "." + gen.extension), gen.text);
  if (!gen.weights.empty()) write(dir / (stem + ".weights"), gen.weights);
  Emit({{"files", files}, {"seed", opts.seed}}, opts, tty, out);
  return kExitOk;
}

void AddInstanceOptions(CLI::App* cmd, Options& opts) {
  cmd->add_option("--matrix", opts.matrix, "Binary matroid file");
  cmd->add_option("--graph", opts.graph, "Graph file");
  cmd->add_option("--uniform", opts.uniform,
                  "Uniform matroid as `n,r` or a `uniform n r` file");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, bool tty) {
  Options opts;
  CLI::App app{"Matroid optimization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", opts.seed, "Seed for every random choice");
  app.add_flag("--json", opts.json, "Emit JSON even on a terminal");
  app.add_option("--max-n", opts.max_n,
                 "Raise the element limit of exhaustive checks");

  CLI::App* solve = app.add_subcommand("solve", "Find a minimum-weight basis");
  AddInstanceOptions(solve, opts);
  solve->add_option("--weights", opts.weights, "Weights file");
  solve->add_option("--algo", opts.algo, "Algorithm")
      ->check(CLI::IsMember({"greedy", "boruvka", "reduction-kuw"}));
  solve->add_flag("--certify", opts.certify,
                  "Attach a cocircuit certificate for the solution");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run exhaustive structural checks");
  AddInstanceOptions(verify_cmd, opts);
  verify_cmd->add_option("--weights", opts.weights, "Weights file");
  verify_cmd->add_option(
      "--checks", opts.checks,
      "Comma list of certificate, white, tutte, duality, axioms, "
      "lattice-geometric");
  verify_cmd->add_option("--solution", opts.solution,
                         "Comma list of element names to certify");

  CLI::App* gen = app.add_subcommand("gen", "Generate instance files");
  gen->add_option("spec", opts.gen_args,
                  "random-binary R N | random-graph V E | fixture NAME")
      ->required();
  gen->add_option("--out", opts.out_dir,
                  "Directory for the instance and weights files");
  gen->add_option("--name", opts.stem, "File stem inside --out");
  gen->add_flag("--allow-rank-zero", opts.allow_rank_zero,
                "Accept rank-0 random matrices");

  CLI::App* lattice =
      app.add_subcommand("lattice", "List the flats by rank");
  AddInstanceOptions(lattice, opts);
  lattice->add_option("--emit-dot", opts.emit_dot,
                      "Write the Hasse diagram as DOT (`-` for stdout)");

  CLI::App* basis = app.add_subcommand("basis", "Run the block basis search");
  AddInstanceOptions(basis, opts);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (solve->parsed()) return CmdSolve(opts, tty, out);
    if (verify_cmd->parsed()) return CmdVerify(opts, tty, out);
    if (gen->parsed()) return CmdGen(opts, tty, out);
    if (lattice->parsed()) return CmdLattice(opts, tty, out);
    return CmdBasis(opts, tty, out);
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceGuard;
  } catch (const IncompleteWeightsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadWeights;
  } catch (const InvalidContractionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const FaultyOracleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const MatroidError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
}

}  // namespace matroid::cli
