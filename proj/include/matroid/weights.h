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

#ifndef MATROID_WEIGHTS_H_
#define MATROID_WEIGHTS_H_

#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matroid/ground_set.h"
#include "matroid/subset.h"

namespace matroid {

// Weights as read from a file, keyed by element name.
using NamedWeights = std::map<std::string, double>;

// Real weights indexed by element. Every comparison uses the lexicographic
// order (weight, index), so ties never make an algorithm nondeterministic.
class WeightMap {
 public:
  WeightMap() = default;
  explicit WeightMap(std::vector<double> weights);

  // Throws IncompleteWeightsError if some element of `ground` has no weight
  // and DomainError if `named` mentions an unknown element.
  static WeightMap FromNamed(const GroundSet& ground, const NamedWeights& named);
  // w(e_i) = i, counting from one.
  static WeightMap Ascending(int n);

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int index) const { return w_.at(index); }
  const std::vector<double>& values() const { return w_; }

  bool Less(int a, int b) const {
    return w_[a] < w_[b] || (w_[a] == w_[b] && a < b);
  }
  double Total(Subset s) const;
  // Elements of `s` in increasing (weight, index) order.
  std::vector<int> Sorted(Subset s) const;

 private:
  std::vector<double> w_;
};

struct WeightValidation {
  // Pairs of element names sharing a weight.
  std::vector<std::pair<std::string, std::string>> duplicates;

  bool ok() const { return duplicates.empty(); }
};

// Checks injectivity. Throws IncompleteWeightsError when an element of
// `ground` is missing from `weights`.
WeightValidation ValidateWeights(const NamedWeights& weights,
                                 const GroundSet& ground);

// The unique element of `s` minimizing (w(x), index(x)). Throws DomainError
// when `s` is empty.
int ArgminWeight(Subset s, const WeightMap& w);

// `name weight` per line; '#' starts a comment. Throws ParseError.
NamedWeights ParseWeights(std::istream& in);
NamedWeights ReadWeightsFile(const std::string& path);

}  // namespace matroid

#endif  // MATROID_WEIGHTS_H_
