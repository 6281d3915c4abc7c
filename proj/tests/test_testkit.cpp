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

#include <numeric>
#include <set>

#include "support.hpp"

namespace faigle {
namespace {

std::vector<Lattice> of_size(const std::vector<Lattice>& ls, std::size_t n) {
  std::vector<Lattice> out;
  for (const auto& l : ls)
    if (l.size() == n) out.push_back(l);
  return out;
}

TEST(Enumerate, Trivial) {
  testkit::EnumConfig cfg;
  cfg.max_elements = 1;
  EXPECT_EQ(testkit::enumerate_lattices(cfg).size(), 1u);
  cfg.max_elements = 0;
  EXPECT_TRUE(testkit::enumerate_lattices(cfg).empty());
  cfg.max_elements = testkit::kMaxEnumerationSize + 1;
  EXPECT_THROW(testkit::enumerate_lattices(cfg), BoundExceeded);
}

// The extension enumerator and the brute-force pass agree on counts, and
// every brute-force representative is isomorphic to exactly one enumerated
// lattice.
TEST(Enumerate, AgreesWithBruteForce) {
  const auto& all = test::lattices(7, testkit::Filter::kAll);
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<Lattice> ours = of_size(all, n);
    std::vector<Lattice> brute = testkit::brute_force_lattices(n);
    ASSERT_EQ(ours.size(), brute.size()) << "size " << n;
    for (const auto& b : brute) {
      std::size_t matches = 0;
      for (const auto& l : ours) matches += test::isomorphic(b, l) ? 1 : 0;
      EXPECT_EQ(matches, 1u);
    }
  }
}

TEST(Enumerate, ClassesArePairwiseNonIsomorphic) {
  const auto& all = test::lattices(7, testkit::Filter::kAll);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i].size() == all[j].size()) {
        EXPECT_FALSE(test::isomorphic(all[i], all[j]));
      }
}

TEST(Enumerate, CanonicalFormIsALabellingInvariant) {
  for (const Lattice& l : test::lattices(6, testkit::Filter::kAll)) {
    // Reverse the element indices.
    const std::size_t n = l.size();
    Lattice r = Lattice::from_poset(Poset::from_relation(
        n, [&](Elem x, Elem y) { return l.leq(n - 1 - x, n - 1 - y); }));
    EXPECT_EQ(testkit::canonical_form(l), testkit::canonical_form(r));
  }
}

TEST(Enumerate, Filters) {
  const auto& all = test::lattices(7, testkit::Filter::kAll);
  const auto& semi = test::lattices(7, testkit::Filter::kSemimodular);
  const auto& slim = test::lattices(7, testkit::Filter::kSlimSemimodular);
  std::size_t expected_semi = 0, expected_slim = 0;
  for (const auto& l : all) {
    if (is_semimodular(l)) ++expected_semi;
    if (is_semimodular(l) && is_slim(l)) ++expected_slim;
  }
  EXPECT_EQ(semi.size(), expected_semi);
  EXPECT_EQ(slim.size(), expected_slim);
  for (const auto& l : semi) EXPECT_TRUE(is_semimodular(l));
  for (const auto& l : slim) EXPECT_TRUE(is_semimodular(l) && is_slim(l));
}

TEST(Enumerate, Deterministic) {
  testkit::EnumConfig cfg;
  cfg.max_elements = 6;
  auto a = testkit::enumerate_lattices(cfg);
  cfg.seed = 99;
  auto b = testkit::enumerate_lattices(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].order(), b[i].order());
}

TEST(Posets, SmallCounts) {
  // Cross-check against a labelled count: the number of labelled posets
  // is the sum over classes of n! / |Aut|.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t labelled = 0;
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::set<std::vector<char>> seen;
    for (const Poset& p : testkit::enumerate_posets(n)) {
      std::vector<Elem> q = perm;
      do {
        std::vector<char> m(n * n);
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y) m[x * n + y] = p.leq(q[x], q[y]);
        seen.insert(m);
      } while (std::next_permutation(q.begin(), q.end()));
    }
    // Direct count of reflexive, antisymmetric, transitive relations.
    const std::size_t pairs = n * (n - 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::vector<char> m(n * n, 0);
      std::size_t k = 0;
      for (Elem x = 0; x < n; ++x) {
        m[x * n + x] = 1;
        for (Elem y = 0; y < n; ++y)
          if (x != y) m[x * n + y] = (mask >> k++) & 1U;
      }
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x)
        for (Elem y = 0; y < n && ok; ++y) {
          if (x != y && m[x * n + y] && m[y * n + x]) ok = false;
          for (Elem z = 0; z < n && ok; ++z)
            if (m[x * n + y] && m[y * n + z] && !m[x * n + z]) ok = false;
        }
      labelled += ok ? 1 : 0;
    }
    EXPECT_EQ(seen.size(), labelled) << "n = " << n;
  }
}

TEST(RandomFamilies, SatisfyTheStructuralAxioms) {
  EXPECT_TRUE(testkit::random_closure_candidates(Poset::chain(3), 0, 1).empty());
  Poset p = Poset::from_covers(4, {{0, 2}, {1, 2}, {1, 3}});
  auto fams = testkit::random_closure_candidates(p, 50, 3);
  ASSERT_EQ(fams.size(), 50u);
  std::set<std::vector<ElemSet>> distinct(fams.begin(), fams.end());
  EXPECT_GT(distinct.size(), 1u);
  for (const auto& f : fams) {
    AxiomReport r = check_axioms(FaigleGeometry(p, f));
    EXPECT_TRUE(r.holds_cap && r.holds_down && r.holds_pr);
  }
  EXPECT_EQ(testkit::random_closure_candidates(p, 50, 3), fams);
}

TEST(RandomFamilies, DownSetCount) {
  EXPECT_EQ(testkit::all_down_sets(Poset::chain(4)).size(), 5u);
  EXPECT_EQ(testkit::all_down_sets(Poset::antichain(4)).size(), 16u);
}

TEST(Filters, Parse) {
  EXPECT_EQ(testkit::parse_filter("slim-semimodular"),
            testkit::Filter::kSlimSemimodular);
  EXPECT_THROW(testkit::parse_filter("modular"), PreconditionFailed);
}

}  // namespace
}  // namespace faigle
