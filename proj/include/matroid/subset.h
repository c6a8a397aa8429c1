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

#ifndef MATROID_SUBSET_H_
#define MATROID_SUBSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace matroid {

// Largest ground set a Subset can address.
inline constexpr int kMaxElements = 64;

// A subset of a ground set, stored as a bitset over dense element indices.
class Subset {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    explicit Iterator(uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator&) const = default;

   private:
    uint64_t rest_ = 0;
  };

  constexpr Subset() = default;
  constexpr explicit Subset(uint64_t bits) : bits_(bits) {}
  Subset(std::initializer_list<int> indices) {
    for (int i : indices) bits_ |= Bit(i);
  }

  static Subset FromIndices(const std::vector<int>& indices) {
    Subset s;
    for (int i : indices) s.bits_ |= Bit(i);
    return s;
  }
  // The set {0, ..., n-1}.
  static constexpr Subset Full(int n) {
    return Subset(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  static constexpr Subset Singleton(int i) { return Subset(Bit(i)); }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
  constexpr bool IsSubsetOf(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(Subset other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Smallest index in the set; the set must be nonempty.
  int front() const { return std::countr_zero(bits_); }

  constexpr Subset With(int i) const { return Subset(bits_ | Bit(i)); }
  constexpr Subset Without(int i) const { return Subset(bits_ & ~Bit(i)); }
  void Insert(int i) { bits_ |= Bit(i); }
  void Erase(int i) { bits_ &= ~Bit(i); }

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }
  std::vector<int> Indices() const { return {begin(), end()}; }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  friend constexpr Subset operator^(Subset a, Subset b) {
    return Subset(a.bits_ ^ b.bits_);
  }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }
  Subset& operator&=(Subset o) {
    bits_ &= o.bits_;
    return *this;
  }
  Subset& operator-=(Subset o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  // Total order by bit pattern; used only for canonical containers.
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  static constexpr uint64_t Bit(int i) { return uint64_t{1} << i; }

  uint64_t bits_ = 0;
};

// Orders subsets by cardinality, then lexicographically by sorted indices.
inline bool CanonicalLess(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // The smallest differing index decides: whoever holds it comes first.
  return a.contains(std::countr_zero(diff));
}

// Calls fn(sub) for every subset of `mask`, including the empty set.
template <typename Fn>
void ForEachSubsetOf(Subset mask, Fn&& fn) {
  uint64_t m = mask.bits();
  uint64_t s = 0;
  while (true) {
    fn(Subset(s));
    if (s == m) break;
    s = (s - m) & m;
  }
}

struct SubsetHash {
  size_t operator()(Subset s) const { return std::hash<uint64_t>{}(s.bits()); }
};

}  // namespace matroid

#endif  // MATROID_SUBSET_H_
