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

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "faigle/congruence.hpp"
#include "faigle/geometry.hpp"

namespace faigle {

/// Two disjoint chains covering Jir L (as lattice elements) and the number of
/// comparable pairs across them.
struct ChainPair {
  ElemSet a;
  ElemSet b;
  std::size_t delta = 0;
};

struct DeltaResult {
  std::size_t value = 0;
  ChainPair best;
};

inline std::size_t cross_comparabilities(const Poset& p, const ElemSet& a,
                                         const ElemSet& b) {
  std::size_t count = 0;
  a.for_each([&](Elem x) {
    b.for_each([&](Elem y) { count += p.comparable(x, y) ? 1 : 0; });
  });
  return count;
}

namespace detail {

inline void require_slim_semimodular(const Lattice& l) {
  if (!is_semimodular(l)) throw NotSemimodular("lattice is not semimodular");
  if (!is_slim(l)) throw NotSlim("Jir L has width greater than 2");
}

}  // namespace detail

/// Minimum cross comparability count over all splits of Jir L into two
/// disjoint chains. The first chain always holds the smallest
/// join-irreducible; among minimizers the lexicographically smallest split
/// (first chain, then second) wins.
inline DeltaResult delta(const Lattice& l) {
  detail::require_slim_semimodular(l);
  if (is_chain(l)) throw IsAChain("lattice is a chain");
  const std::vector<Elem> jir = join_irreducibles(l).elements();
  const std::size_t m = jir.size();
  if (m > 30)
    throw CapacityExceeded("chain split search limited to 30 "
                           "join-irreducibles");
  const Poset& p = l.order();
  std::optional<DeltaResult> best;
  std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> best_key;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
    ElemSet a, b;
    a.insert(jir[0]);
    for (std::size_t i = 1; i < m; ++i) {
      if ((mask >> (i - 1)) & 1U)
        b.insert(jir[i]);
      else
        a.insert(jir[i]);
    }
    if (b.empty() || !p.is_chain(a) || !p.is_chain(b)) continue;
    const std::size_t value = cross_comparabilities(p, a, b);
    auto key = std::pair(a.elements(), b.elements());
    if (!best || value < best->value ||
        (value == best->value && key < *best_key)) {
      best = DeltaResult{value, ChainPair{a, b, value}};
      best_key = std::move(key);
    }
  }
  detail::ensure(best.has_value(), "slim non-chain lattice has no chain split");
  detail::ensure((best->value == 0) == is_slim_rectangular(l),
                 "delta is zero but the lattice is not rectangular, or "
                 "vice versa");
  return *best;
}

struct RectStep {
  /// Oriented so that a ∈ pair.a and b ∈ pair.b.
  ChainPair pair;
  /// Join-irreducibles of L with b ≺ a in Jir L.
  Elem a = 0, b = 0;
  /// Elements of L.
  Elem z0 = 0, z1 = 0;
  /// The new element ↓_Q a of K.
  Elem z2 = 0;
  /// Subset of pair.b (lattice elements of L).
  ElemSet b0;
  /// The modified order on the ground of Geom L.
  Poset q;
  FaigleGeometry g;
  /// L ⊆ K seen as a corner with (z0, z1, z2, a) as (a, c, d, b).
  CornerData corner;
  std::size_t delta_before = 0;
  std::size_t delta_after = 0;
  std::size_t size_after = 0;
};

struct RectStepResult {
  Lattice lattice;
  std::vector<Elem> embedding;
  RectStep step;
};

namespace detail {

// Cover pairs (lower, upper) of Jir L with the two ends in different chains,
// smallest (upper, lower) first.
inline std::optional<std::pair<Elem, Elem>> cross_cover(const Lattice& l,
                                                        const ChainPair& pair) {
  const JirPoset jp = jir_poset(l);
  std::optional<std::pair<Elem, Elem>> best;
  for (auto [lo, hi] : jp.poset.covers()) {
    const Elem x = jp.elements[lo];
    const Elem y = jp.elements[hi];
    const bool split = (pair.a.contains(x) && pair.b.contains(y)) ||
                       (pair.b.contains(x) && pair.a.contains(y));
    if (!split) continue;
    if (!best || std::pair(y, x) < std::pair(best->second, best->first))
      best = std::pair(x, y);
  }
  return best;
}

}  // namespace detail

/// One step towards a rectangular lattice: adds the single flat ↓_Q a to
/// Geom L, reducing the cross comparability count of the split.
inline RectStepResult rect_step(const Lattice& l, const ChainPair& given) {
  detail::require_slim_semimodular(l);
  if (is_chain(l)) throw IsAChain("lattice is a chain");
  const ElemSet jir = join_irreducibles(l);
  const Poset& order = l.order();
  detail::require((given.a & given.b).empty(), "chains are not disjoint");
  detail::require((given.a | given.b) == jir, "chains do not cover Jir L");
  detail::require(order.is_chain(given.a) && order.is_chain(given.b),
                  "split parts are not chains");
  const std::size_t delta_before =
      cross_comparabilities(order, given.a, given.b);
  detail::require(delta_before > 0, "split is already rectangular");

  auto cover = detail::cross_cover(l, given);
  detail::ensure(cover.has_value(),
                 "NoCoveringPair: no cover between the two chains");
  RectStepResult out;
  RectStep& step = out.step;
  step.b = cover->first;
  step.a = cover->second;
  step.pair = given.a.contains(step.a) ? ChainPair{given.a, given.b, 0}
                                       : ChainPair{given.b, given.a, 0};
  step.pair.delta = delta_before;
  step.delta_before = delta_before;
  const ElemSet& chain_a = step.pair.a;
  const ElemSet& chain_b = step.pair.b;
  const Elem a = step.a;
  const Elem b = step.b;

  const ElemSet below_a = jir & order.strict_down_set(a);
  const ElemSet below_a_in_a = chain_a & below_a;
  step.z1 = l.join_all(below_a);
  const Elem s = l.join_all(below_a_in_a);
  chain_b.for_each([&](Elem y) {
    if (l.less(l.join(y, s), step.z1)) step.b0.insert(y);
  });
  detail::ensure(below_a == (below_a_in_a | (chain_b & order.down_set(b))),
                 "⇓a is not ⇓_A a ∪ ↓_B b");
  detail::ensure(!step.b0.contains(b), "b lies in B0");

  const JirPoset jp = jir_poset(l);
  const FaigleGeometry f = geom_of_lattice(l);
  const Elem ga = jp.index_of(a);
  const ElemSet lowered = jp.to_ground(step.b0 | below_a_in_a);
  const Poset& p = f.ground();
  try {
    step.q = Poset::from_relation(p.size(), [&](Elem y, Elem x) {
      if (x == y) return true;
      if (x != ga) return p.less(y, x);
      return lowered.contains(y);
    });
  } catch (const NotAPoset& err) {
    throw InvariantViolation(std::string("modified order: ") + err.what());
  }
  for (Elem x = 0; x < p.size(); ++x)
    if (x != ga)
      detail::ensure(step.q.down_set(x) == p.down_set(x),
                     "↓_Q d differs from ↓_P d for d ≠ a");
  detail::ensure(step.q.down_set(ga).proper_subset_of(p.down_set(ga)),
                 "↓_Q a is not a proper subset of ↓_P a");
  for (const ElemSet* chain : {&chain_a, &chain_b}) {
    const ElemSet g_chain = jp.to_ground(*chain);
    detail::ensure(step.q.is_chain(g_chain), "a split chain broke in Q");
  }

  ElemSet down_a_in_a = below_a_in_a;
  down_a_in_a.insert(a);
  const ElemSet new_flat = step.q.down_set(ga);
  detail::ensure(new_flat == jp.to_ground(down_a_in_a | step.b0),
                 "↓_Q a is not ↓_A a ∪ B0");
  const ElemSet strict_q = step.q.strict_down_set(ga);
  detail::ensure(strict_q == jp.to_ground(below_a_in_a | step.b0),
                 "⇓_Q a is not ⇓_A a ∪ B0");
  detail::ensure(f.contains_flat(strict_q), "⇓_Q a is not a flat of Geom L");
  step.z0 = l.join_all(jp.to_lattice(strict_q));
  detail::ensure(l.is_cover(step.z0, step.z1), "z0 ≺ z1 fails in L");
  detail::ensure(l.upper_covers(step.z0) == ElemSet::singleton(step.z1),
                 "z1 is not the only cover of z0");

  std::vector<ElemSet> flats = f.flats();
  flats.push_back(new_flat);
  step.g = FaigleGeometry(step.q, std::move(flats));
  detail::ensure(step.g.flats().size() == f.flats().size() + 1,
                 "↓_Q a was already a flat");
  detail::ensure(step.g.verify(), "extended family is not a Faigle geometry");

  FlatLattice fl = lattice_of_flats(step.g);
  out.embedding.resize(l.size());
  for (Elem x = 0; x < l.size(); ++x)
    out.embedding[x] = fl.element_of(jp.to_ground(jir & order.down_set(x)));
  step.z2 = fl.element_of(new_flat);
  out.lattice = std::move(fl.lattice);
  const Lattice& k = out.lattice;

  Embedding e(l, k, out.embedding);
  detail::ensure(k.size() == l.size() + 1, "|K| is not |L| + 1");
  detail::ensure(length(k) == length(l), "length changed");
  wild_sublattice_check(e);
  detail::ensure(is_cover_preserving_sublattice(e),
                 "L is not a cover-preserving sublattice of K");
  detail::ensure(is_slim(k), "K is not slim");

  step.corner = CornerData{step.z0, step.z1, a, step.z2, out.embedding};
  try {
    validate_corner(l, k, step.corner);
  } catch (const PreconditionFailed& err) {
    throw InvariantViolation(std::string("corner configuration: ") + err.what());
  }
  detail::ensure(k.upper_covers(step.z2) == ElemSet::singleton(e(a)),
                 "a is not the only cover of z2");
  verify_corner_lemma(l, k, step.corner);
  detail::ensure(is_congruence_preserving_extension(e),
                 "K is not a congruence-preserving extension of L");

  step.delta_after = delta(k).value;
  detail::ensure(step.delta_after < delta_before, "delta did not decrease");
  step.size_after = k.size();
  return out;
}

struct RectangularExtension {
  Lattice lattice;
  /// L -> K element map.
  std::vector<Elem> embedding;
  /// Set when L was a chain and a corner was inserted first.
  std::optional<CornerData> chain_corner;
  std::vector<RectStep> steps;

  std::size_t added_elements() const {
    return steps.size() + (chain_corner ? 1 : 0);
  }
};

/// Congruence-preserving, length-preserving extension of a slim semimodular
/// lattice with at least three elements to a slim rectangular lattice.
inline RectangularExtension extend_to_rectangular(const Lattice& l) {
  if (l.size() < 3) throw TooSmall("lattice has fewer than 3 elements");
  detail::require_slim_semimodular(l);
  RectangularExtension out;
  Lattice current = l;
  out.embedding.resize(l.size());
  for (Elem x = 0; x < l.size(); ++x) out.embedding[x] = x;

  if (is_chain(l)) {
    std::vector<Elem> chain = l.order().linear_extension();
    const std::size_t n = chain.size();
    CornerExtension ext =
        corner_insert(l, chain[n - 3], chain[n - 2], chain[n - 1]);
    verify_corner_lemma(l, ext.lattice, ext.data);
    out.chain_corner = ext.data;
    current = std::move(ext.lattice);
  }

  while (true) {
    DeltaResult d = delta(current);
    if (d.value == 0) break;
    RectStepResult r = rect_step(current, d.best);
    for (auto& x : out.embedding) x = r.embedding[x];
    current = std::move(r.lattice);
    out.steps.push_back(std::move(r.step));
  }

  Embedding total(l, current, out.embedding);
  detail::ensure(is_slim_rectangular(current), "result is not slim rectangular");
  detail::ensure(length(current) == length(l), "length not preserved");
  detail::ensure(current.size() == l.size() + out.added_elements(),
                 "element count does not match the step count");
  detail::ensure(is_congruence_preserving_extension(total),
                 "composite extension is not congruence-preserving");
  out.lattice = std::move(current);
  return out;
}

}  // namespace faigle
