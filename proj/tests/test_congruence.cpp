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

#include <set>

#include "support.hpp"

namespace faigle {
namespace {

Congruence blocks(std::size_t n, std::vector<ElemSet> bs) {
  return Congruence::from_blocks(n, bs);
}

std::set<Congruence> as_set(const std::vector<Congruence>& v) {
  return {v.begin(), v.end()};
}

TEST(Congruence, Normalization) {
  EXPECT_EQ(Congruence({5, 5, 2}), Congruence({0, 0, 1}));
  EXPECT_EQ(Congruence::identity(3).block_count(), 3u);
  EXPECT_EQ(Congruence::all(3).block_count(), 1u);
  EXPECT_TRUE(Congruence::identity(3).refines(Congruence::all(3)));
  EXPECT_FALSE(Congruence::all(3).refines(Congruence::identity(3)));
  EXPECT_THROW(blocks(3, {{0, 1}, {1, 2}}), PreconditionFailed);
  EXPECT_THROW(blocks(3, {{0, 1}}), PreconditionFailed);
}

TEST(Congruence, Principal) {
  Lattice c3 = test::chain(3);
  EXPECT_EQ(principal_congruence(c3, 1, 1), Congruence::identity(3));
  EXPECT_EQ(principal_congruence(c3, 0, 1), blocks(3, {{0, 1}, {2}}));
  // N5: collapsing a and c touches nothing else.
  Lattice n5 = test::n5();
  EXPECT_EQ(principal_congruence(n5, 1, 3), blocks(5, {{0}, {1, 3}, {2}, {4}}));
  // Collapsing 0 and a forces b with 1 (join with b), then 0 with c.
  EXPECT_EQ(principal_congruence(n5, 0, 1), blocks(5, {{0, 1, 3}, {2, 4}}));
}

TEST(Congruence, AllCongruencesOfSmallLattices) {
  EXPECT_EQ(all_congruences(test::chain(3)).size(), 4u);
  EXPECT_EQ(all_congruences(test::b2()).size(), 4u);
  EXPECT_EQ(all_congruences(test::chain(1)).size(), 1u);
  // M3 is simple.
  EXPECT_EQ(all_congruences(test::m3()).size(), 2u);
  EXPECT_EQ(as_set(all_congruences(test::b2()).members),
            as_set(testkit::congruences_by_partition_filter(test::b2())));
}

TEST(Congruence, ConIsALattice) {
  CongruenceLattice con = all_congruences(test::n5());
  Lattice l = con.as_lattice();
  EXPECT_EQ(l.size(), con.size());
  EXPECT_EQ(con.members[l.bottom()], Congruence::identity(5));
  EXPECT_EQ(con.members[l.top()], Congruence::all(5));
  // Con of a chain is Boolean; 2^9 members do not fit a Lattice.
  EXPECT_EQ(all_congruences(test::chain(10)).size(), 512u);
}

TEST(Congruence, Restriction) {
  Lattice c3 = test::chain(3), sq = test::b2();
  Embedding e(c3, sq, {0, 1, 3});
  EXPECT_EQ(restriction(Congruence::identity(4), e), Congruence::identity(3));
  EXPECT_EQ(restriction(Congruence::all(4), e), Congruence::all(3));
  EXPECT_EQ(restriction(blocks(4, {{0, 1}, {2, 3}}), e), blocks(3, {{0, 1}, {2}}));
}

TEST(Congruence, PreservingExtensions) {
  Lattice c2 = test::chain(2), c3 = test::chain(3), sq = test::b2();
  EXPECT_TRUE(is_congruence_preserving_extension(Embedding::identity(sq)));
  EXPECT_TRUE(is_congruence_preserving_extension(Embedding(c3, sq, {0, 1, 3})));
  EXPECT_FALSE(is_congruence_preserving_extension(Embedding(c2, c3, {0, 2})));
  Lattice cube = test::boolean(3);
  EXPECT_THROW(is_congruence_preserving_extension(Embedding(sq, cube, {0, 1, 2, 7})),
               NotASublattice);
}

TEST(Congruence, CornerOnThreeChain) {
  Lattice c3 = test::chain(3);
  CornerExtension ext = corner_insert(c3, 0, 1, 2);
  EXPECT_EQ(ext.lattice.size(), 4u);
  EXPECT_TRUE(test::isomorphic(ext.lattice, test::b2()));
  EXPECT_EQ(ext.data.d, 3u);
  EXPECT_TRUE(verify_corner_lemma(c3, ext.lattice, ext.data));

  const Lattice& k = ext.lattice;
  EXPECT_EQ(epsilon_extend(c3, k, ext.data, Congruence::identity(3)),
            Congruence::identity(4));
  EXPECT_EQ(epsilon_extend(c3, k, ext.data, Congruence::all(3)),
            Congruence::all(4));
  Congruence beta = blocks(3, {{0, 1}, {2}});
  Congruence delta = epsilon_extend(c3, k, ext.data, beta);
  const auto& m = ext.data.embedding;
  EXPECT_EQ(delta, blocks(4, {{m[0], m[1]}, {ext.data.d, m[2]}}));
}

// Inserting beside y in 0 < x < y < 1 gives a square {x, y, d, 1} on top
// of 0, which is modular, so it is not N5.
TEST(Congruence, CornerOnFourChain) {
  Lattice c4 = test::chain(4);
  CornerExtension ext = corner_insert(c4, 1, 2, 3);
  const Lattice& k = ext.lattice;
  ASSERT_EQ(k.size(), 5u);
  const auto& m = ext.data.embedding;
  const Elem d = ext.data.d;
  EXPECT_TRUE(k.is_cover(m[1], m[2]));
  EXPECT_TRUE(k.is_cover(m[2], m[3]));
  EXPECT_TRUE(k.is_cover(m[1], d));
  EXPECT_TRUE(k.is_cover(d, m[3]));
  Lattice bottom_plus_square =
      Lattice::from_covers(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  EXPECT_TRUE(test::isomorphic(k, bottom_plus_square));
  EXPECT_FALSE(test::isomorphic(k, test::n5()));
  EXPECT_TRUE(verify_corner_lemma(c4, k, ext.data));
}

TEST(Congruence, CornerPreconditions) {
  // 0 has two covers in B2, so it is not meet-irreducible.
  EXPECT_THROW(corner_insert(test::b2(), 0, 1, 3), PreconditionFailed);
  // Not a pair of covers.
  EXPECT_THROW(corner_insert(test::chain(4), 0, 1, 3), PreconditionFailed);
}

TEST(Congruence, PartitionFilterCounts) {
  EXPECT_EQ(testkit::congruences_by_partition_filter(test::chain(2)).size(), 2u);
  EXPECT_EQ(testkit::congruences_by_partition_filter(test::chain(3)).size(), 4u);
  EXPECT_EQ(as_set(testkit::congruences_by_partition_filter(test::n5())),
            as_set(all_congruences(test::n5()).members));
  EXPECT_THROW(testkit::congruences_by_partition_filter(test::chain(9)),
               BoundExceeded);
}

// Structural facts on every congruence of every lattice up to 6 elements.
TEST(Congruence, BlocksAndPrincipalGenerators) {
  for (const Lattice& l : test::lattices(6, testkit::Filter::kAll)) {
    CongruenceLattice con = all_congruences(l);
    for (const Congruence& theta : con.members) {
      EXPECT_TRUE(is_congruence(l, theta));
      EXPECT_TRUE(blocks_are_convex_sublattices(l, theta));
    }
    for (Elem x = 0; x < l.size(); ++x)
      for (Elem y = 0; y < l.size(); ++y) {
        Congruence p = principal_congruence(l, x, y);
        EXPECT_TRUE(p.related(x, y));
        // Least: every congruence relating x and y contains it.
        for (const Congruence& theta : con.members)
          if (theta.related(x, y)) {
            EXPECT_TRUE(p.refines(theta));
          }
      }
  }
}

}  // namespace
}  // namespace faigle
