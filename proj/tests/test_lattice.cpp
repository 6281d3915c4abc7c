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

#include <gtest/gtest.h>

#include "support.hpp"

namespace faigle {
namespace {

using test::b2;
using test::chain;
using test::m3;
using test::n5;

// Oracles that only look at the order relation.

bool brute_cover(const Lattice& l, Elem x, Elem y) {
  if (!l.less(x, y)) return false;
  for (Elem z = 0; z < l.size(); ++z)
    if (l.less(x, z) && l.less(z, y)) return false;
  return true;
}

Elem brute_join(const Lattice& l, Elem x, Elem y) {
  for (Elem z = 0; z < l.size(); ++z) {
    if (!l.leq(x, z) || !l.leq(y, z)) continue;
    bool least = true;
    for (Elem w = 0; w < l.size(); ++w)
      if (l.leq(x, w) && l.leq(y, w) && !l.leq(z, w)) least = false;
    if (least) return z;
  }
  return kMaxElements;
}

Elem brute_meet(const Lattice& l, Elem x, Elem y) {
  for (Elem z = 0; z < l.size(); ++z) {
    if (!l.leq(z, x) || !l.leq(z, y)) continue;
    bool greatest = true;
    for (Elem w = 0; w < l.size(); ++w)
      if (l.leq(w, x) && l.leq(w, y) && !l.leq(w, z)) greatest = false;
    if (greatest) return z;
  }
  return kMaxElements;
}

bool brute_semimodular(const Lattice& l) {
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      if (brute_cover(l, brute_meet(l, x, y), x) &&
          !brute_cover(l, y, brute_join(l, x, y)))
        return false;
  return true;
}

std::size_t lower_cover_count(const Lattice& l, Elem x) {
  std::size_t c = 0;
  for (Elem y = 0; y < l.size(); ++y) c += brute_cover(l, y, x) ? 1 : 0;
  return c;
}

TEST(Lattice, ChainJoinIsMaxMeetIsMin) {
  Lattice c = chain(3);
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y) {
      EXPECT_EQ(c.join(x, y), std::max(x, y));
      EXPECT_EQ(c.meet(x, y), std::min(x, y));
    }
  EXPECT_EQ(c.bottom(), 0u);
  EXPECT_EQ(c.top(), 2u);
}

TEST(Lattice, Diamond) {
  Lattice l = b2();
  EXPECT_EQ(l.join(1, 2), 3u);
  EXPECT_EQ(l.meet(1, 2), 0u);
  EXPECT_EQ(l.join_all({}), l.bottom());
  EXPECT_EQ(l.meet_all({}), l.top());
}

TEST(Lattice, HexagonTablesMatchBruteForce) {
  Lattice h = test::hexagon();
  for (Elem x = 0; x < h.size(); ++x)
    for (Elem y = 0; y < h.size(); ++y) {
      EXPECT_EQ(h.join(x, y), brute_join(h, x, y));
      EXPECT_EQ(h.meet(x, y), brute_meet(h, x, y));
    }
}

TEST(Lattice, RejectsNonLattices) {
  // Two maximal elements.
  EXPECT_THROW(Lattice::from_covers(3, {{0, 1}, {0, 2}}), NotALattice);
  // a, b below both c and d.
  EXPECT_THROW(Lattice::from_covers(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3},
                                        {2, 4}, {3, 5}, {4, 5}}),
               NotALattice);
  EXPECT_THROW(Lattice::from_covers(0, {}), NotALattice);
}

TEST(Lattice, Irreducibles) {
  Lattice c3 = chain(3);
  EXPECT_EQ(join_irreducibles(c3), (ElemSet{1, 2}));
  EXPECT_EQ(meet_irreducibles(c3), (ElemSet{0, 1}));
  EXPECT_EQ(atoms(c3), ElemSet{1});
  EXPECT_EQ(join_irreducibles(b2()), (ElemSet{1, 2}));
  EXPECT_EQ(meet_irreducibles(b2()), (ElemSet{1, 2}));
  EXPECT_EQ(atoms(b2()), (ElemSet{1, 2}));
  EXPECT_EQ(join_irreducibles(m3()), (ElemSet{1, 2, 3}));
  EXPECT_EQ(atoms(m3()), (ElemSet{1, 2, 3}));
}

TEST(Lattice, Length) {
  EXPECT_EQ(length(chain(4)), 3u);
  EXPECT_EQ(length(b2()), 2u);
  EXPECT_EQ(length(n5()), 3u);
  EXPECT_FALSE(maximal_chains_have_equal_length(n5()));
  EXPECT_TRUE(maximal_chains_have_equal_length(m3()));
}

TEST(Lattice, Semimodularity) {
  EXPECT_TRUE(is_semimodular(chain(5)));
  EXPECT_TRUE(is_semimodular(m3()));
  EXPECT_FALSE(is_semimodular(n5()));
  auto w = semimodularity_violation(n5());
  ASSERT_TRUE(w.has_value());
  // x = b, y = a: b ∧ a = 0 ≺ b, but a ⋖ b ∨ a = 1 fails.
  EXPECT_EQ(*w, (ElemPair{2, 1}));
}

TEST(Lattice, StructuralPredicates) {
  EXPECT_TRUE(is_geometric(b2()));
  EXPECT_TRUE(is_slim(b2()));
  EXPECT_TRUE(is_slim_rectangular(b2()));
  EXPECT_FALSE(is_geometric(chain(3)));
  EXPECT_TRUE(is_slim(chain(3)));
  EXPECT_FALSE(is_slim_rectangular(chain(3)));
  EXPECT_TRUE(is_geometric(m3()));
  EXPECT_FALSE(is_slim(m3()));
  EXPECT_TRUE(is_slim_rectangular(test::grid(2, 3)));
  EXPECT_FALSE(is_slim_rectangular(test::pendant_top()));
}

TEST(Lattice, Embeddings) {
  Lattice c3 = chain(3), sq = b2();
  Embedding e(c3, sq, {0, 1, 3});
  EXPECT_TRUE(is_meet_subsemilattice(e));
  EXPECT_TRUE(is_sublattice(e));
  EXPECT_TRUE(wild_sublattice_check(e));

  // {0, a, b, 1} inside the cube via two atoms: meets agree, joins do not.
  Lattice cube = test::boolean(3);
  Embedding two_atoms(sq, cube, {0, 1, 2, 7});
  EXPECT_TRUE(is_meet_subsemilattice(two_atoms));
  EXPECT_FALSE(is_sublattice(two_atoms));
  EXPECT_THROW(wild_sublattice_check(two_atoms), PreconditionFailed);

  Lattice pentagon = n5();
  Embedding id = Embedding::identity(pentagon);
  EXPECT_TRUE(is_meet_subsemilattice(id));
  EXPECT_TRUE(is_sublattice(id));
  EXPECT_TRUE(is_cover_preserving_sublattice(id));

  EXPECT_THROW(Embedding(c3, sq, {0, 1, 1}), PreconditionFailed);
  EXPECT_THROW(Embedding(c3, sq, {1, 0, 3}), PreconditionFailed);
}

TEST(Lattice, Isomorphism) {
  Lattice relabelled = Lattice::from_covers(4, {{3, 0}, {3, 2}, {0, 1}, {2, 1}});
  auto phi = find_isomorphism(b2(), relabelled);
  ASSERT_TRUE(phi.has_value());
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y)
      EXPECT_EQ(b2().leq(x, y), relabelled.leq((*phi)[x], (*phi)[y]));
  EXPECT_FALSE(find_isomorphism(b2(), chain(4)).has_value());
  EXPECT_FALSE(find_isomorphism(n5(), m3()).has_value());
}

// Table, irreducible and predicate checks against the order-only oracles on
// every lattice with at most 7 elements.
TEST(Lattice, SweepAgainstOrderOracles) {
  for (const Lattice& l : test::lattices(7, testkit::Filter::kAll)) {
    const ElemSet jir = join_irreducibles(l);
    const ElemSet mir = meet_irreducibles(l);
    for (Elem x = 0; x < l.size(); ++x) {
      EXPECT_EQ(jir.contains(x), lower_cover_count(l, x) == 1);
      std::size_t up = 0;
      for (Elem y = 0; y < l.size(); ++y) {
        up += brute_cover(l, x, y) ? 1 : 0;
        EXPECT_EQ(l.join(x, y), brute_join(l, x, y));
        EXPECT_EQ(l.meet(x, y), brute_meet(l, x, y));
        EXPECT_EQ(l.is_cover(x, y), brute_cover(l, x, y));
      }
      EXPECT_EQ(mir.contains(x), up == 1);
    }
    EXPECT_EQ(is_semimodular(l), brute_semimodular(l));
    // Semimodular lattices satisfy the Jordan-Dedekind chain condition.
    if (is_semimodular(l)) {
      EXPECT_TRUE(maximal_chains_have_equal_length(l));
    }
    EXPECT_EQ(is_geometric(l), is_semimodular(l) && jir == atoms(l));
    EXPECT_EQ(is_slim(l), jir_poset(l).poset.width() <= 2);
  }
}

}  // namespace
}  // namespace faigle
