// Copyright 2026 The indepkit Authors
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

#ifndef INDEPKIT_ATTRIBUTE_SET_H_
#define INDEPKIT_ATTRIBUTE_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace indepkit {

// Schemas are limited to this many attributes so that attribute sets fit a
// single machine word.
inline constexpr int kMaxAttributes = 64;

// A set of attribute positions of one schema. Positions are 0-based indices
// into Schema::attributes().
class AttributeSet {
 public:
  constexpr AttributeSet() = default;
  constexpr AttributeSet(std::initializer_list<int> positions) {
    for (int p : positions) insert(p);
  }

  static constexpr AttributeSet from_bits(std::uint64_t bits) {
    AttributeSet s;
    s.bits_ = bits;
    return s;
  }
  // {0, 1, ..., n-1}
  static constexpr AttributeSet first(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr AttributeSet single(int position) {
    return from_bits(std::uint64_t{1} << position);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int position) const {
    return (bits_ >> position) & 1U;
  }
  constexpr void insert(int position) { bits_ |= std::uint64_t{1} << position; }
  constexpr void erase(int position) { bits_ &= ~(std::uint64_t{1} << position); }

  constexpr bool subset_of(AttributeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(AttributeSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Lowest position, or -1 when empty.
  constexpr int front() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  // Positions in increasing order.
  std::vector<int> positions() const;

  friend constexpr AttributeSet operator|(AttributeSet a, AttributeSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr AttributeSet operator&(AttributeSet a, AttributeSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr AttributeSet operator-(AttributeSet a, AttributeSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  constexpr AttributeSet& operator|=(AttributeSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr AttributeSet& operator&=(AttributeSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr AttributeSet& operator-=(AttributeSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr bool operator==(AttributeSet, AttributeSet) = default;
  friend constexpr auto operator<=>(AttributeSet, AttributeSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Calls `fn` on every subset of `set`, including the empty set and `set`
// itself, in increasing order of the subset's bit pattern.
template <typename Fn>
void for_each_subset(AttributeSet set, Fn&& fn) {
  const std::uint64_t full = set.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(AttributeSet::from_bits(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace indepkit

template <>
struct std::hash<indepkit::AttributeSet> {
  std::size_t operator()(indepkit::AttributeSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // INDEPKIT_ATTRIBUTE_SET_H_
