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

#include "matroid/ground_set.h"

#include <string>
#include <utility>
#include <vector>

#include "matroid/errors.h"

namespace matroid {

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > static_cast<size_t>(kMaxElements)) {
    throw DomainError("ground set has " + std::to_string(names_.size()) +
                      " elements; at most 64 are supported");
  }
  for (int i = 0; i < size(); ++i) {
    if (names_[i].empty()) throw DomainError("empty element name");
    if (!index_.emplace(names_[i], i).second) {
      throw DomainError("duplicate element name '" + names_[i] + "'");
    }
  }
}

GroundSet GroundSet::Numbered(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return GroundSet(std::move(names));
}

GroundSet GroundSet::Lettered(int n) {
  if (n > 26) return Numbered(n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(names));
}

std::optional<int> GroundSet::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Subset GroundSet::Parse(const std::vector<std::string>& names) const {
  Subset s;
  for (const std::string& name : names) {
    std::optional<int> i = Find(name);
    if (!i) throw DomainError("unknown element '" + name + "'");
    s.Insert(*i);
  }
  return s;
}

std::vector<std::string> GroundSet::Names(Subset s) const {
  std::vector<std::string> out;
  for (int i : s) out.push_back(name(i));
  return out;
}

std::string GroundSet::Format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ",";
    out += name(i);
    first = false;
  }
  return out + "}";
}

}  // namespace matroid
