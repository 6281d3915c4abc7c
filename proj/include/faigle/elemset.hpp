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

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "faigle/error.hpp"

namespace faigle {

/// Elements of every finite structure are dense indices 0..n-1.
using Elem = std::size_t;

/// Largest ground set any structure in the library may have.
inline constexpr std::size_t kMaxElements = 256;

/// A subset of {0, ..., kMaxElements-1} stored as a fixed-width bitset.
///
/// The total order `<=>` is the canonical one used for deterministic output:
/// smaller sets first, equal sizes compared lexicographically on their sorted
/// member lists.
class ElemSet {
  static constexpr std::size_t kWords = kMaxElements / 64;

 public:
  ElemSet() = default;
  ElemSet(std::initializer_list<Elem> members) {
    for (Elem x : members) insert(x);
  }
  explicit ElemSet(const std::vector<Elem>& members) {
    for (Elem x : members) insert(x);
  }

  /// {0, ..., n-1}.
  static ElemSet range(std::size_t n) {
    check_capacity(n);
    ElemSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0}
                               : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  static ElemSet singleton(Elem x) {
    ElemSet s;
    s.insert(x);
    return s;
  }

  static void check_capacity(std::size_t n) {
    if (n > kMaxElements)
      throw CapacityExceeded("structure with " + std::to_string(n) +
                             " elements exceeds capacity " +
                             std::to_string(kMaxElements));
  }

  bool contains(Elem x) const {
    return x < kMaxElements && ((words_[x / 64] >> (x % 64)) & 1U) != 0;
  }
  void insert(Elem x) {
    if (x >= kMaxElements)
      throw IndexOutOfRange("element " + std::to_string(x) +
                            " exceeds set capacity");
    words_[x / 64] |= std::uint64_t{1} << (x % 64);
  }
  void erase(Elem x) {
    if (x < kMaxElements) words_[x / 64] &= ~(std::uint64_t{1} << (x % 64));
  }

  std::size_t size() const {
    std::size_t count = 0;
    for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or kMaxElements when empty.
  Elem first() const { return next(0); }
  /// Smallest member >= from, or kMaxElements if none.
  Elem next(Elem from) const {
    if (from >= kMaxElements) return kMaxElements;
    std::size_t w = from / 64;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (word != 0)
        return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
      if (++w == kWords) return kMaxElements;
      word = words_[w];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (Elem x = first(); x < kMaxElements; x = next(x + 1)) f(x);
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for_each([&](Elem x) { out.push_back(x); });
    return out;
  }

  bool subset_of(const ElemSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }
  bool proper_subset_of(const ElemSet& other) const {
    return subset_of(other) && *this != other;
  }
  bool intersects(const ElemSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  ElemSet& operator-=(const ElemSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

  friend std::strong_ordering operator<=>(const ElemSet& a, const ElemSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    Elem x = a.first();
    Elem y = b.first();
    while (x < kMaxElements) {
      if (x != y) return x <=> y;
      x = a.next(x + 1);
      y = b.next(y + 1);
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_)
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    return h;
  }

  /// "{0,2,5}".
  std::string to_string() const {
    std::string out = "{";
    bool first_member = true;
    for_each([&](Elem x) {
      if (!first_member) out += ",";
      out += std::to_string(x);
      first_member = false;
    });
    return out + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const ElemSet& s) {
    return os << s.to_string();
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace faigle
