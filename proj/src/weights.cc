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

#include "matroid/weights.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matroid/errors.h"

namespace matroid {

WeightMap::WeightMap(std::vector<double> weights) : w_(std::move(weights)) {
  for (double x : w_) {
    if (!std::isfinite(x)) throw DomainError("weights must be finite");
  }
}

WeightMap WeightMap::FromNamed(const GroundSet& ground,
                               const NamedWeights& named) {
  std::vector<double> w(ground.size());
  std::vector<std::string> missing;
  for (int i = 0; i < ground.size(); ++i) {
    auto it = named.find(ground.name(i));
    if (it == named.end()) {
      missing.push_back(ground.name(i));
    } else {
      w[i] = it->second;
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw IncompleteWeightsError("no weight for: " + list);
  }
  for (const auto& [name, value] : named) {
    if (!ground.Find(name)) {
      throw DomainError("weight given for unknown element '" + name + "'");
    }
  }
  return WeightMap(std::move(w));
}

WeightMap WeightMap::Ascending(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return WeightMap(std::move(w));
}

double WeightMap::Total(Subset s) const {
  double total = 0;
  for (int i : s) total += w_.at(i);
  return total;
}

std::vector<int> WeightMap::Sorted(Subset s) const {
  std::vector<int> order = s.Indices();
  std::sort(order.begin(), order.end(),
            [this](int a, int b) { return Less(a, b); });
  return order;
}

WeightValidation ValidateWeights(const NamedWeights& weights,
                                 const GroundSet& ground) {
  WeightMap w = WeightMap::FromNamed(ground, weights);
  WeightValidation result;
  std::vector<int> order = w.Sorted(ground.all());
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t j = i + 1; j < order.size() && w[order[j]] == w[order[i]];
         ++j) {
      result.duplicates.emplace_back(ground.name(order[i]),
                                     ground.name(order[j]));
    }
  }
  return result;
}

int ArgminWeight(Subset s, const WeightMap& w) {
  if (s.empty()) throw DomainError("argmin over an empty set");
  int best = s.front();
  for (int i : s) {
    if (w.Less(i, best)) best = i;
  }
  return best;
}

NamedWeights ParseWeights(std::istream& in) {
  NamedWeights out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;
    std::string value_text;
    std::string extra;
    if (!(fields >> value_text) || (fields >> extra)) {
      throw ParseError("weights line " + std::to_string(line_no) +
                       ": expected `name weight`");
    }
    double value = 0;
    size_t used = 0;
    try {
      value = std::stod(value_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value_text.size() || !std::isfinite(value)) {
      throw ParseError("weights line " + std::to_string(line_no) +
                       ": bad weight '" + value_text + "'");
    }
    if (!out.emplace(name, value).second) {
      throw ParseError("weights line " + std::to_string(line_no) +
                       ": duplicate entry for '" + name + "'");
    }
  }
  return out;
}

NamedWeights ReadWeightsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open weights file '" + path + "'");
  return ParseWeights(in);
}

}  // namespace matroid
