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

#include "matroid/lattice.h"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matroid/errors.h"

namespace matroid {

FlatLattice FlatLattice::Build(Oracle& oracle, int max_elements) {
  return FromTable(IndependenceTable(oracle, max_elements));
}

FlatLattice FlatLattice::BuildProbed(const Oracle& oracle, int max_elements) {
  return FromTable(IndependenceTable::Probed(oracle, max_elements));
}

FlatLattice FlatLattice::FromTable(IndependenceTable table) {
  FlatLattice lattice;
  std::set<Subset> flats;
  ForEachSubsetOf(table.domain(), [&](Subset s) {
    if (table.independent(s)) flats.insert(table.Closure(s));
  });
  std::vector<std::pair<int, Subset>> ranked;
  for (Subset f : flats) ranked.emplace_back(table.Rank(f), f);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return CanonicalLess(a.second, b.second);
  });
  for (const auto& [rank, flat] : ranked) {
    lattice.flats_.push_back(flat);
    lattice.rank_.push_back(rank);
  }
  lattice.table_ = std::move(table);
  lattice.Index();
  lattice.ComputeCovers(/*graded=*/true);
  return lattice;
}

FlatLattice FlatLattice::FromFamily(std::vector<Subset> family, Subset top) {
  family.push_back(top);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::set<Subset> members(family.begin(), family.end());
  for (Subset a : family) {
    if (!a.IsSubsetOf(top)) throw DomainError("family member exceeds top");
    for (Subset b : family) {
      if (!members.count(a & b)) {
        throw DomainError("family is not closed under intersection");
      }
    }
  }
  // Heights: inclusion implies smaller cardinality, so process by size.
  std::sort(family.begin(), family.end(),
            [](Subset a, Subset b) { return CanonicalLess(a, b); });
  std::map<Subset, int> height;
  for (Subset f : family) {
    int h = 0;
    for (const auto& [g, hg] : height) {
      if (g != f && g.IsSubsetOf(f)) h = std::max(h, hg + 1);
    }
    height[f] = h;
  }
  std::sort(family.begin(), family.end(), [&](Subset a, Subset b) {
    if (height[a] != height[b]) return height[a] < height[b];
    return CanonicalLess(a, b);
  });
  FlatLattice lattice;
  for (Subset f : family) {
    lattice.flats_.push_back(f);
    lattice.rank_.push_back(height[f]);
  }
  lattice.Index();
  lattice.ComputeCovers(/*graded=*/false);
  return lattice;
}

void FlatLattice::Index() {
  id_.clear();
  for (int i = 0; i < size(); ++i) id_[flats_[i]] = i;
}

void FlatLattice::ComputeCovers(bool graded) {
  up_.assign(size(), {});
  down_.assign(size(), {});
  for (int a = 0; a < size(); ++a) {
    for (int b = a + 1; b < size(); ++b) {
      if (flats_[a] == flats_[b] || !flats_[a].IsSubsetOf(flats_[b])) continue;
      bool cover;
      if (graded) {
        cover = rank_[b] == rank_[a] + 1;
      } else {
        cover = true;
        for (int c = 0; c < size() && cover; ++c) {
          if (c == a || c == b) continue;
          if (flats_[a].IsSubsetOf(flats_[c]) &&
              flats_[c].IsSubsetOf(flats_[b])) {
            cover = false;
          }
        }
      }
      if (cover) {
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
  }
}

std::optional<int> FlatLattice::Find(Subset s) const {
  auto it = id_.find(s);
  if (it == id_.end()) return std::nullopt;
  return it->second;
}

bool FlatLattice::Covers(int upper, int lower) const {
  const std::vector<int>& ups = up_.at(lower);
  return std::binary_search(ups.begin(), ups.end(), upper);
}

int FlatLattice::Meet(int a, int b) const {
  std::optional<int> id = Find(flat(a) & flat(b));
  if (!id) throw DomainError("meet of two flats is not a flat");
  return *id;
}

int FlatLattice::Join(int a, int b) const {
  const Subset both = flat(a) | flat(b);
  if (table_) {
    std::optional<int> id = Find(table_->Closure(both));
    if (!id) throw DomainError("closure is not a listed flat");
    return *id;
  }
  // The intersection of all upper bounds.
  Subset join = flat(top());
  for (Subset f : flats_) {
    if (both.IsSubsetOf(f)) join &= f;
  }
  std::optional<int> id = Find(join);
  if (!id) throw DomainError("join of two flats is not a flat");
  return *id;
}

std::vector<int> FlatLattice::OfRank(int r) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (rank_[i] == r) out.push_back(i);
  }
  return out;
}

bool IsGeometric(const FlatLattice& lattice) {
  const std::vector<int> atoms = lattice.Atoms();
  for (int f = 0; f < lattice.size(); ++f) {
    int join = lattice.bottom();
    for (int a : atoms) {
      if (lattice.Leq(a, f)) join = lattice.Join(join, a);
    }
    if (join != f) return false;
  }
  for (int a = 0; a < lattice.size(); ++a) {
    for (int b = 0; b < lattice.size(); ++b) {
      const int meet = lattice.Meet(a, b);
      if (lattice.Covers(a, meet) && !lattice.Covers(lattice.Join(a, b), b)) {
        return false;
      }
    }
  }
  return true;
}

Sublattice SublatticeGenerated(const FlatLattice& lattice,
                               const std::vector<int>& generators) {
  std::vector<bool> in(lattice.size(), false);
  std::vector<int> members;
  std::vector<int> work;
  auto add = [&](int id) {
    if (!in[id]) {
      in[id] = true;
      members.push_back(id);
      work.push_back(id);
    }
  };
  for (int g : generators) add(g);
  while (!work.empty()) {
    const int fresh = work.back();
    work.pop_back();
    // `members` may grow while we walk it; each pair is still visited from
    // whichever side was added later.
    for (size_t k = 0; k < members.size(); ++k) {
      const int other = members[k];
      add(lattice.Meet(fresh, other));
      add(lattice.Join(fresh, other));
    }
  }
  std::sort(members.begin(), members.end());
  return {members, generators};
}

namespace {

// Minimal members strictly above `bottom`.
std::vector<int> MinimalAbove(const FlatLattice& lattice,
                              const std::vector<int>& members, int bottom) {
  std::vector<int> out;
  for (int m : members) {
    if (m == bottom) continue;
    bool minimal = true;
    for (int o : members) {
      if (o != m && o != bottom && lattice.Leq(o, m)) minimal = false;
    }
    if (minimal) out.push_back(m);
  }
  return out;
}

std::vector<int> MaximalBelow(const FlatLattice& lattice,
                              const std::vector<int>& members, int top) {
  std::vector<int> out;
  for (int m : members) {
    if (m == top) continue;
    bool maximal = true;
    for (int o : members) {
      if (o != m && o != top && lattice.Leq(m, o)) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

}  // namespace

bool IsBooleanAlgebra(const FlatLattice& lattice, const Sublattice& sub) {
  const std::vector<int>& members = sub.members;
  if (members.empty()) return false;
  int bottom = members.front();
  int top = members.front();
  for (int m : members) {
    bottom = lattice.Meet(bottom, m);
    top = lattice.Join(top, m);
  }
  const std::set<int> member_set(members.begin(), members.end());
  if (!member_set.count(bottom) || !member_set.count(top)) return false;

  const std::vector<int> atoms = MinimalAbove(lattice, members, bottom);
  const size_t k = atoms.size();
  if (k >= 20 || members.size() != (size_t{1} << k)) return false;

  // Unique decomposition: the 2^k joins of atom subsets are exactly the
  // members, without repetition.
  std::set<int> joins;
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    int join = bottom;
    for (size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1) join = lattice.Join(join, atoms[i]);
    }
    if (!member_set.count(join) || !joins.insert(join).second) return false;
  }

  // Each atom is dual to the join of the others, a coatom not above it.
  const std::vector<int> coatoms = MaximalBelow(lattice, members, top);
  if (coatoms.size() != k) return false;
  std::set<int> duals;
  for (size_t i = 0; i < k; ++i) {
    int join = bottom;
    for (size_t j = 0; j < k; ++j) {
      if (j != i) join = lattice.Join(join, atoms[j]);
    }
    if (std::find(coatoms.begin(), coatoms.end(), join) == coatoms.end() ||
        lattice.Leq(atoms[i], join) || !duals.insert(join).second) {
      return false;
    }
  }
  return true;
}

bool IsCofree(const FlatLattice& lattice,
              const std::vector<int>& hyperplanes) {
  for (int h : hyperplanes) {
    if (h < 0 || h >= lattice.size() ||
        lattice.rank_of(h) != lattice.height() - 1) {
      throw DomainError("cofree check given a flat that is not a hyperplane");
    }
  }
  std::vector<int> generators = hyperplanes;
  generators.push_back(lattice.top());
  const Sublattice sub = SublatticeGenerated(lattice, generators);
  if (!IsBooleanAlgebra(lattice, sub)) return false;
  std::vector<int> coatoms = MaximalBelow(lattice, sub.members, lattice.top());
  std::set<int> expected(hyperplanes.begin(), hyperplanes.end());
  return std::set<int>(coatoms.begin(), coatoms.end()) == expected;
}

std::vector<Subset> BasisGeneratedHyperplanes(Oracle& oracle, Subset basis,
                                              Subset meet,
                                              const FlatLattice* lattice) {
  const Subset domain = oracle.domain();
  if (!basis.IsSubsetOf(domain) || !meet.IsSubsetOf(domain) ||
      basis.Intersects(meet)) {
    throw DomainError("basis and meet must be disjoint subsets of the domain");
  }
  if (Closure(oracle, meet) != meet) {
    throw DomainError("meet " + oracle.ground().Format(meet) +
                      " is not a flat");
  }
  const int meet_rank = Rank(oracle, meet);
  const int joint_rank = Rank(oracle, meet | basis);
  if (joint_rank != meet_rank + basis.size() ||
      joint_rank != Rank(oracle, domain)) {
    throw DomainError(oracle.ground().Format(basis) +
                      " is not a basis of the contraction by " +
                      oracle.ground().Format(meet));
  }
  std::vector<Subset> hyperplanes;
  for (int x : basis) {
    hyperplanes.push_back(Closure(oracle, meet | basis.Without(x)));
  }
  if (lattice != nullptr) {
    std::vector<int> ids;
    const std::vector<int> points = basis.Indices();
    for (size_t i = 0; i < hyperplanes.size(); ++i) {
      std::optional<int> id = lattice->Find(hyperplanes[i]);
      if (!id) throw FaultyOracleError("generated hyperplane is not a flat");
      ids.push_back(*id);
      for (size_t j = 0; j < points.size(); ++j) {
        if (hyperplanes[i].contains(points[j]) != (i != j)) {
          throw FaultyOracleError(
              "basis point lies on the wrong side of a generated hyperplane");
        }
      }
    }
    if (!ids.empty() && !IsCofree(*lattice, ids)) {
      throw FaultyOracleError("basis-generated hyperplanes are not cofree");
    }
  }
  return hyperplanes;
}

std::optional<FlatInterval> FindU42Interval(const FlatLattice& lattice) {
  const int h = lattice.height();
  if (h >= 2) {
    for (int f : lattice.OfRank(h - 2)) {
      const int size = 2 + static_cast<int>(lattice.upper_covers(f).size());
      if (size >= 6) return FlatInterval{f, lattice.top(), size};
    }
  }
  for (int f = 0; f < lattice.size(); ++f) {
    std::map<int, int> middle;
    for (int c : lattice.upper_covers(f)) {
      for (int g : lattice.upper_covers(c)) ++middle[g];
    }
    for (const auto& [g, count] : middle) {
      if (count + 2 >= 6) return FlatInterval{f, g, count + 2};
    }
  }
  return std::nullopt;
}

void WriteDot(const FlatLattice& lattice, const GroundSet& ground,
              std::ostream& out) {
  out << "digraph flats {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < lattice.size(); ++i) {
    out << "  f" << i << " [label=\"" << ground.Format(lattice.flat(i))
        << "\"];\n";
  }
  for (int r = 0; r <= lattice.height(); ++r) {
    out << "  { rank=same;";
    for (int i : lattice.OfRank(r)) out << " f" << i << ";";
    out << " }\n";
  }
  for (int i = 0; i < lattice.size(); ++i) {
    for (int j : lattice.upper_covers(i)) {
      out << "  f" << i << " -> f" << j << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace matroid
