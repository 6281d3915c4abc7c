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

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "faigle/geometry.hpp"

namespace faigle {

/// One lowering step: the join-irreducible `a` is detached from everything
/// below it, and every flat of T gains a copy with `a` added (the family N).
struct LoweringStep {
  Elem a = 0;
  Poset q;
  std::vector<ElemSet> t;
  std::vector<ElemSet> n;
  FaigleGeometry g;
  std::size_t k_before = 0;
  std::size_t k_after = 0;
};

/// Elements of the ground that correspond to Jir ∖ At of the lattice of
/// flats: those with a nonempty strict down-set.
inline ElemSet non_atomic_points(const Poset& p) {
  ElemSet out;
  for (Elem u = 0; u < p.size(); ++u)
    if (!p.strict_down_set(u).empty()) out.insert(u);
  return out;
}

/// Admissible choices for the lowering step: maximal non-atomic points.
inline ElemSet lowering_candidates(const FaigleGeometry& g) {
  return g.ground().maximal_elements(non_atomic_points(g.ground()));
}

inline LoweringStep lowering_step(const FaigleGeometry& g, Elem a) {
  detail::require_verified(g);
  Poset::check_index(a, g.size());
  detail::require(lowering_candidates(g).contains(a),
                  "element " + std::to_string(a) +
                      " is not a maximal non-atomic join-irreducible");
  const Poset& p = g.ground();
  LoweringStep step;
  step.a = a;
  step.q = Poset::from_relation(p.size(), [&](Elem x, Elem y) {
    return x == y || (x != a && y != a && p.less(x, y));
  });

  const auto& flats = g.flats();
  const auto& covers = g.upper_covers();
  std::unordered_set<ElemSet, ElemSetHash> in_t, in_n;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (flats[i].contains(a)) continue;
    bool blocked = false;
    for (std::size_t j : covers[i]) blocked = blocked || flats[j].contains(a);
    if (blocked) continue;
    step.t.push_back(flats[i]);
    ElemSet with_a = flats[i];
    with_a.insert(a);
    step.n.push_back(with_a);
    in_t.insert(flats[i]);
    in_n.insert(with_a);
  }

  for (const auto& x : step.n)
    detail::ensure(!g.contains_flat(x), "F and N intersect at " + x.to_string());

  std::vector<ElemSet> merged = flats;
  merged.insert(merged.end(), step.n.begin(), step.n.end());
  // Every member of G below a member of N ∪ T is in N ∪ T, and in T when
  // the upper one is.
  for (const auto& x : merged) {
    const bool x_t = in_t.count(x) != 0;
    const bool x_n = in_n.count(x) != 0;
    if (!x_t && !x_n) continue;
    for (const auto& y : merged) {
      if (!y.subset_of(x)) continue;
      const bool y_t = in_t.count(y) != 0;
      detail::ensure(y_t || in_n.count(y) != 0,
                     "N ∪ T is not down-closed in G");
      detail::ensure(!x_t || y_t, "T is not down-closed in G");
    }
  }

  step.g = FaigleGeometry(step.q, std::move(merged));
  detail::ensure(step.g.flats().size() == flats.size() + step.n.size(),
                 "merging N into F lost members");
  detail::ensure(step.g.verify(), "lowered family is not a Faigle geometry");
  step.k_before = p.comparable_pair_count();
  step.k_after = step.q.comparable_pair_count();
  detail::ensure(step.k_after < step.k_before,
                 "comparability count did not decrease");
  return step;
}

struct GeometricExtension {
  Lattice lattice;
  /// L -> K element map.
  std::vector<Elem> embedding;
  std::vector<LoweringStep> steps;
  /// The final geometry; `lattice` is its lattice of flats.
  FaigleGeometry geometry;
};

/// Length-preserving embedding of a finite semimodular lattice into a
/// geometric lattice with as many atoms as L has join-irreducibles.
///
/// Among admissible points the smallest ground index is lowered first.
inline GeometricExtension extend_to_geometric(const Lattice& l) {
  if (!is_semimodular(l)) throw NotSemimodular("lattice is not semimodular");
  GeometricExtension out;
  FaigleGeometry g = geom_of_lattice(l);
  FlatLattice current = lattice_of_flats(g);
  {
    JirPoset jp = jir_poset(l);
    const ElemSet jir = join_irreducibles(l);
    out.embedding.resize(l.size());
    for (Elem x = 0; x < l.size(); ++x)
      out.embedding[x] =
          current.element_of(jp.to_ground(jir & l.order().down_set(x)));
  }
  const std::size_t len = length(l);

  while (!is_geometric(current.lattice)) {
    ElemSet candidates = lowering_candidates(g);
    detail::ensure(!candidates.empty(),
                   "non-geometric lattice has no point to lower");
    LoweringStep step = lowering_step(g, candidates.first());
    FlatLattice next = lattice_of_flats(step.g);

    std::vector<Elem> inclusion(current.lattice.size());
    for (Elem i = 0; i < inclusion.size(); ++i)
      inclusion[i] = next.element_of(current.flats[i]);
    Embedding e(current.lattice, next.lattice, inclusion);
    detail::ensure(is_meet_subsemilattice(e),
                   "old flats are not a meet-subsemilattice");
    detail::ensure(length(next.lattice) == len, "lowering changed the length");
    wild_sublattice_check(e);
    detail::ensure(is_cover_preserving_sublattice(e),
                   "old flats are not a cover-preserving sublattice");

    for (auto& x : out.embedding) x = inclusion[x];
    g = step.g;
    current = std::move(next);
    out.steps.push_back(std::move(step));
  }

  Embedding total(l, current.lattice, out.embedding);
  detail::ensure(length(current.lattice) == len, "length not preserved");
  detail::ensure(atoms(current.lattice).size() == join_irreducibles(l).size(),
                 "atom count differs from |Jir L|");
  detail::ensure(is_sublattice(total), "L is not a sublattice of K");
  detail::ensure(is_cover_preserving_sublattice(total),
                 "L is not cover-preserving in K");
  out.lattice = std::move(current.lattice);
  out.geometry = std::move(g);
  return out;
}

}  // namespace faigle
