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

#ifndef MATROID_GROUND_SET_H_
#define MATROID_GROUND_SET_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "matroid/subset.h"

namespace matroid {

struct ElementId {
  int index = 0;
  std::string name;

  friend bool operator==(const ElementId&, const ElementId&) = default;
};

// Dense, uniquely named elements 0..n-1. Names are only used for I/O.
class GroundSet {
 public:
  GroundSet() = default;
  // Throws DomainError on duplicate names or more than kMaxElements entries.
  explicit GroundSet(std::vector<std::string> names);

  // Elements named e1, e2, ..., en.
  static GroundSet Numbered(int n);
  // Elements named a, b, c, ... (falls back to Numbered past 26).
  static GroundSet Lettered(int n);

  int size() const { return static_cast<int>(names_.size()); }
  Subset all() const { return Subset::Full(size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int index) const { return names_.at(index); }
  ElementId element(int index) const { return {index, name(index)}; }
  std::optional<int> Find(std::string_view name) const;

  // Throws DomainError when a name is unknown.
  Subset Parse(const std::vector<std::string>& names) const;
  std::vector<std::string> Names(Subset s) const;
  // "{a,b,c}"
  std::string Format(Subset s) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace matroid

#endif  // MATROID_GROUND_SET_H_
