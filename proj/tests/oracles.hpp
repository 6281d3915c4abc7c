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

// Straight-from-the-definition checks on plain sets of subsets. These share
// no code with the library beyond ElemSet and the order relation.

#pragma once

#include <algorithm>
#include <vector>

#include "faigle/poset.hpp"

namespace faigle::oracle {

using Family = std::vector<ElemSet>;

inline bool member(const Family& f, const ElemSet& x) {
  return std::find(f.begin(), f.end(), x) != f.end();
}

/// Intersection of all members containing X (the ground set if none).
inline ElemSet closure(const Poset& p, const Family& f, const ElemSet& x) {
  ElemSet out = p.ground();
  for (const auto& y : f)
    if (x.subset_of(y)) out = out & y;
  return out;
}

/// Y covers X in (F, ⊆).
inline bool covers(const Family& f, const ElemSet& x, const ElemSet& y) {
  if (!x.proper_subset_of(y)) return false;
  for (const auto& z : f)
    if (x.proper_subset_of(z) && z.proper_subset_of(y)) return false;
  return true;
}

struct Axioms {
  bool cap = true, down = true, pr = true, cp = true, fep = true;
};

inline Axioms axioms(const Poset& p, const Family& f) {
  Axioms a;
  const std::size_t n = p.size();
  a.cap = member(f, p.ground());
  for (const auto& x : f)
    for (const auto& y : f)
      if (!member(f, x & y)) a.cap = false;
  for (const auto& x : f)
    for (Elem u = 0; u < n; ++u)
      for (Elem v = 0; v < n; ++v)
        if (x.contains(u) && p.leq(v, u) && !x.contains(v)) a.down = false;
  a.pr = member(f, ElemSet{});
  for (Elem u = 0; u < n; ++u) {
    ElemSet below, strictly;
    for (Elem v = 0; v < n; ++v) {
      if (p.leq(v, u)) below.insert(v);
      if (p.less(v, u)) strictly.insert(v);
    }
    if (!member(f, below) || !member(f, strictly)) a.pr = false;
  }
  // CP: u ∉ X ∈ F with ⇓u ⊆ X has a cover Y of X in F that contains u.
  for (Elem u = 0; u < n; ++u)
    for (const auto& x : f) {
      if (x.contains(u)) continue;
      bool below = true;
      for (Elem v = 0; v < n; ++v)
        if (p.less(v, u) && !x.contains(v)) below = false;
      if (!below) continue;
      bool found = false;
      for (const auto& y : f)
        if (y.contains(u) && covers(f, x, y)) found = true;
      if (!found) a.cp = false;
    }
  // FEP over every S ∈ F.
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v)
      for (const auto& s : f) {
        if (s.contains(u) || s.contains(v)) continue;
        bool below = true;
        for (Elem w = 0; w < n; ++w)
          if (p.less(w, u) && !s.contains(w)) below = false;
        if (!below) continue;
        ElemSet su = s, sv = s;
        su.insert(u);
        sv.insert(v);
        if (closure(p, f, su).contains(v) && !closure(p, f, sv).contains(u))
          a.fep = false;
      }
  return a;
}

}  // namespace faigle::oracle
