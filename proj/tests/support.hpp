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

// Named small lattices and cached enumerations shared by the tests.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "faigle/faigle.hpp"

namespace faigle::test {

inline Lattice labelled(Lattice l, std::vector<std::string> labels) {
  l.set_labels(std::move(labels));
  return l;
}

/// 0 < 1 < ... < n-1.
inline Lattice chain(std::size_t n) {
  std::vector<ElemPair> covers;
  for (Elem i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Lattice::from_covers(n, covers);
}

/// Subsets of {0..k-1}, element index = bitmask.
inline Lattice boolean(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<ElemPair> covers;
  for (Elem s = 0; s < n; ++s)
    for (std::size_t b = 0; b < k; ++b)
      if (!(s & (Elem{1} << b))) covers.emplace_back(s, s | (Elem{1} << b));
  return Lattice::from_covers(n, covers);
}

/// C_m × C_n, element (i, j) at index i*n + j.
inline Lattice grid(std::size_t m, std::size_t n) {
  std::vector<ElemPair> covers;
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < n; ++j) {
      if (i + 1 < m) covers.emplace_back(i * n + j, (i + 1) * n + j);
      if (j + 1 < n) covers.emplace_back(i * n + j, i * n + j + 1);
    }
  return Lattice::from_covers(m * n, covers);
}

// 0, a, b, 1.
inline Lattice b2() {
  return labelled(Lattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
                  {"0", "a", "b", "1"});
}

// 0, a, b, c, 1.
inline Lattice m3() {
  return labelled(Lattice::from_covers(
                      5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}),
                  {"0", "a", "b", "c", "1"});
}

// 0 < a < c < 1 and 0 < b < 1: 0, a, b, c, 1.
inline Lattice n5() {
  return labelled(
      Lattice::from_covers(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}),
      {"0", "a", "b", "c", "1"});
}

// 0 < a, b; a < c; b < d; c, d < 1: 0, a, b, c, d, 1.
inline Lattice hexagon() {
  return labelled(Lattice::from_covers(
                      6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}}),
                  {"0", "a", "b", "c", "d", "1"});
}

// B2 with a new top above its top: 0, a, b, t, 1.
inline Lattice pendant_top() {
  return labelled(
      Lattice::from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}),
      {"0", "a", "b", "t", "1"});
}

inline bool isomorphic(const Lattice& a, const Lattice& b) {
  return find_isomorphism(a, b).has_value();
}

/// Enumerated lattices with at most `max` elements, computed once per
/// process and filter.
inline const std::vector<Lattice>& lattices(std::size_t max,
                                            testkit::Filter filter) {
  static std::map<std::pair<std::size_t, int>, std::vector<Lattice>> cache;
  auto key = std::make_pair(max, static_cast<int>(filter));
  auto it = cache.find(key);
  if (it == cache.end()) {
    testkit::EnumConfig cfg;
    cfg.max_elements = max;
    cfg.filter = filter;
    it = cache.emplace(key, testkit::enumerate_lattices(cfg)).first;
  }
  return it->second;
}

}  // namespace faigle::test
