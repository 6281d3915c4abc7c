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

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "faigle/lattice.hpp"

namespace faigle {

/// A partition of {0, ..., n-1}, stored as a block id per element.
///
/// Block ids are normalized to order of first occurrence, so two partitions
/// are equal iff their `block_of` vectors are. Whether a partition is a
/// congruence depends on the lattice; see is_congruence.
class Congruence {
 public:
  Congruence() = default;
  explicit Congruence(std::vector<std::size_t> block_of)
      : block_of_(std::move(block_of)) {
    normalize();
  }

  static Congruence identity(std::size_t n) {
    std::vector<std::size_t> b(n);
    std::iota(b.begin(), b.end(), std::size_t{0});
    return Congruence(std::move(b));
  }
  static Congruence all(std::size_t n) {
    return Congruence(std::vector<std::size_t>(n, 0));
  }
  static Congruence from_blocks(std::size_t n,
                                const std::vector<ElemSet>& blocks) {
    std::vector<std::size_t> b(n, n);
    for (std::size_t i = 0; i < blocks.size(); ++i)
      blocks[i].for_each([&](Elem x) {
        Poset::check_index(x, n);
        detail::require(b[x] == n, "element " + std::to_string(x) +
                                       " appears in two blocks");
        b[x] = i;
      });
    for (Elem x = 0; x < n; ++x)
      detail::require(b[x] != n,
                      "element " + std::to_string(x) + " is in no block");
    return Congruence(std::move(b));
  }

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_of(Elem x) const { return block_of_.at(x); }
  bool related(Elem x, Elem y) const { return block_of(x) == block_of(y); }
  std::size_t block_count() const {
    return block_of_.empty()
               ? 0
               : *std::max_element(block_of_.begin(), block_of_.end()) + 1;
  }

  std::vector<ElemSet> blocks() const {
    std::vector<ElemSet> out(block_count());
    for (Elem x = 0; x < size(); ++x) out[block_of_[x]].insert(x);
    return out;
  }

  /// Refinement: every block of *this lies inside a block of `other`.
  bool refines(const Congruence& other) const {
    for (Elem x = 0; x < size(); ++x)
      for (Elem y = x + 1; y < size(); ++y)
        if (related(x, y) && !other.related(x, y)) return false;
    return true;
  }

  const std::vector<std::size_t>& raw() const { return block_of_; }

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence& a, const Congruence& b) {
    return a.block_of_ <=> b.block_of_;
  }

 private:
  void normalize() {
    std::vector<std::size_t> rename(block_of_.size() + 1, kUnset);
    std::size_t next = 0;
    for (auto& b : block_of_) {
      if (b >= rename.size()) rename.resize(b + 1, kUnset);
      if (rename[b] == kUnset) rename[b] = next++;
      b = rename[b];
    }
  }

  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of_;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  explicit UnionFind(const Congruence& c) : UnionFind(c.size()) {
    std::vector<std::size_t> rep(c.block_count(), c.size());
    for (Elem x = 0; x < c.size(); ++x) {
      if (rep[c.block_of(x)] == c.size())
        rep[c.block_of(x)] = x;
      else
        unite(rep[c.block_of(x)], x);
    }
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  Congruence partition() {
    std::vector<std::size_t> b(parent_.size());
    for (std::size_t x = 0; x < parent_.size(); ++x) b[x] = find(x);
    return Congruence(std::move(b));
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Smallest congruence containing the partition `start`: alternate
/// translation passes (x ~ y ⇒ u∨x ~ u∨y, u∧x ~ u∧y) with the transitive
/// closure kept by union-find, until nothing changes.
inline Congruence congruence_closure(const Lattice& l, const Congruence& start) {
  UnionFind uf(start);
  const std::size_t n = l.size();
  bool changed = true;
  while (changed) {
    changed = false;
    Congruence current = uf.partition();
    std::vector<ElemSet> blocks = current.blocks();
    for (const auto& block : blocks) {
      if (block.size() < 2) continue;
      const Elem rep = block.first();
      block.for_each([&](Elem x) {
        if (x == rep) return;
        for (Elem u = 0; u < n; ++u) {
          changed |= uf.unite(l.join(u, rep), l.join(u, x));
          changed |= uf.unite(l.meet(u, rep), l.meet(u, x));
        }
      });
    }
  }
  return uf.partition();
}

}  // namespace detail

/// Translation stability: for all u, Θ is preserved by x ↦ u∨x and x ↦ u∧x.
/// For an equivalence on a lattice this is equivalent to compatibility.
inline bool is_congruence(const Lattice& l, const Congruence& c) {
  if (c.size() != l.size()) return false;
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = x + 1; y < l.size(); ++y) {
      if (!c.related(x, y)) continue;
      for (Elem u = 0; u < l.size(); ++u)
        if (!c.related(l.join(u, x), l.join(u, y)) ||
            !c.related(l.meet(u, x), l.meet(u, y)))
          return false;
    }
  return true;
}

/// Each block is a convex sublattice.
inline bool blocks_are_convex_sublattices(const Lattice& l,
                                          const Congruence& c) {
  for (const auto& block : c.blocks()) {
    bool ok = true;
    block.for_each([&](Elem x) {
      block.for_each([&](Elem y) {
        ok = ok && block.contains(l.join(x, y)) &&
             block.contains(l.meet(x, y));
        if (l.leq(x, y)) {
          ElemSet between = l.order().up_set(x) & l.order().down_set(y);
          ok = ok && between.subset_of(block);
        }
      });
    });
    if (!ok) return false;
  }
  return true;
}

/// Join in the lattice of equivalences: transitive closure of the union.
inline Congruence join_partitions(const Congruence& a, const Congruence& b) {
  detail::UnionFind uf(a);
  std::vector<std::size_t> rep(b.block_count(), b.size());
  for (Elem x = 0; x < b.size(); ++x) {
    if (rep[b.block_of(x)] == b.size())
      rep[b.block_of(x)] = x;
    else
      uf.unite(rep[b.block_of(x)], x);
  }
  return uf.partition();
}

/// con(x, y): the smallest congruence collapsing x and y.
inline Congruence principal_congruence(const Lattice& l, Elem x, Elem y) {
  Poset::check_index(x, l.size());
  Poset::check_index(y, l.size());
  detail::UnionFind uf(l.size());
  uf.unite(x, y);
  return detail::congruence_closure(l, uf.partition());
}

/// Con L: every congruence, in refinement-compatible order (more blocks
/// first, ties broken by block vector). Con of a chain is Boolean, so the
/// member list can outgrow a Lattice; the order is built on request.
struct CongruenceLattice {
  std::vector<Congruence> members;

  std::size_t size() const { return members.size(); }

  /// Con L under refinement. Element i is `members[i]`.
  Lattice as_lattice() const {
    Poset order = Poset::from_relation(members.size(), [&](Elem i, Elem j) {
      return members[i].refines(members[j]);
    });
    return Lattice::from_poset(std::move(order));
  }

  std::optional<std::size_t> index_of(const Congruence& c) const {
    auto it = std::find(members.begin(), members.end(), c);
    if (it == members.end()) return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
  }
};

namespace detail {

inline void sort_congruences(std::vector<Congruence>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Congruence& a, const Congruence& b) {
    if (a.block_count() != b.block_count())
      return a.block_count() > b.block_count();
    return a < b;
  });
}

}  // namespace detail

inline CongruenceLattice congruence_lattice_of(std::vector<Congruence> cs) {
  detail::sort_congruences(cs);
  return CongruenceLattice{std::move(cs)};
}

/// Joins of principal congruences of covering pairs, plus the identity.
inline CongruenceLattice all_congruences(const Lattice& l) {
  std::set<Congruence> found;
  std::vector<Congruence> principals;
  for (auto [lo, hi] : l.covers()) {
    Congruence c = principal_congruence(l, lo, hi);
    if (found.insert(c).second) principals.push_back(c);
  }
  found.insert(Congruence::identity(l.size()));
  std::vector<Congruence> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& c : frontier)
      for (const auto& p : principals) {
        Congruence j = join_partitions(c, p);
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  return congruence_lattice_of({found.begin(), found.end()});
}

/// Θ ∩ (L × L) pulled back along the embedding.
inline Congruence restriction(const Congruence& theta, const Embedding& e) {
  if (!is_sublattice(e)) throw NotASublattice("embedding is not a sublattice");
  detail::require(theta.size() == e.target().size(),
                  "congruence size differs from the target lattice");
  std::vector<std::size_t> b(e.source().size());
  for (Elem x = 0; x < b.size(); ++x) b[x] = theta.block_of(e(x));
  Congruence r(std::move(b));
  detail::ensure(is_congruence(e.source(), r),
                 "restriction of a congruence is not a congruence");
  return r;
}

/// Checks that Θ ↦ Θ restricted to L is a bijection Con K → Con L that
/// preserves and reflects the order. The congruence lists may be supplied
/// (for instance by an independent enumeration); otherwise they are computed.
inline bool is_congruence_preserving_extension(
    const Embedding& e, const std::vector<Congruence>& con_target,
    const std::vector<Congruence>& con_source) {
  if (!is_sublattice(e)) throw NotASublattice("embedding is not a sublattice");
  if (con_target.size() != con_source.size()) return false;
  std::vector<Congruence> restricted;
  restricted.reserve(con_target.size());
  for (const auto& theta : con_target)
    restricted.push_back(restriction(theta, e));
  std::set<Congruence> image(restricted.begin(), restricted.end());
  std::set<Congruence> expected(con_source.begin(), con_source.end());
  if (image != expected || image.size() != con_target.size()) return false;
  for (std::size_t i = 0; i < con_target.size(); ++i)
    for (std::size_t j = 0; j < con_target.size(); ++j)
      if (con_target[i].refines(con_target[j]) !=
          restricted[i].refines(restricted[j]))
        return false;
  return true;
}

inline bool is_congruence_preserving_extension(const Embedding& e) {
  if (!is_sublattice(e)) throw NotASublattice("embedding is not a sublattice");
  return is_congruence_preserving_extension(
      e, all_congruences(e.target()).members,
      all_congruences(e.source()).members);
}

/// L ⊆ K where K = L ∪ {d}, a ≺ c ≺ b and a ≺ d ≺ b in K. Elements a, c, b
/// are indices in L; d is an index in K; `embedding` maps L into K.
struct CornerData {
  Elem a = 0, c = 0, b = 0;
  Elem d = 0;
  std::vector<Elem> embedding;
};

struct CornerExtension {
  Lattice lattice;
  CornerData data;
};

/// Checks every hypothesis of the corner configuration; throws
/// PreconditionFailed naming the first one that fails.
inline void validate_corner(const Lattice& l, const Lattice& k,
                            const CornerData& data) {
  Embedding e(l, k, data.embedding);
  detail::require(k.size() == l.size() + 1, "K is not L plus one element");
  detail::require(!e.image().contains(data.d), "d lies in the image of L");
  detail::require(is_sublattice(e), "L is not a sublattice of K");
  const Elem a = e(data.a), c = e(data.c), b = e(data.b), d = data.d;
  detail::require(k.is_cover(a, c) && k.is_cover(c, b),
                  "a ≺ c ≺ b fails in K");
  detail::require(k.is_cover(a, d) && k.is_cover(d, b),
                  "a ≺ d ≺ b fails in K");
  detail::require(meet_irreducibles(l).contains(data.a),
                  "a is not meet-irreducible in L");
  detail::require(join_irreducibles(l).contains(data.b),
                  "b is not join-irreducible in L");
  detail::require(join_irreducibles(k).contains(d) &&
                      meet_irreducibles(k).contains(d),
                  "d is not doubly irreducible in K");
}

/// Adds a new element d to L with a < d < b, making {a, c, d, b} a square.
/// The new element gets index |L|; old elements keep their indices.
inline CornerExtension corner_insert(const Lattice& l, Elem a, Elem c, Elem b) {
  Poset::check_index(a, l.size());
  Poset::check_index(c, l.size());
  Poset::check_index(b, l.size());
  detail::require(l.is_cover(a, c), "a ≺ c fails in L");
  detail::require(l.is_cover(c, b), "c ≺ b fails in L");
  detail::require(meet_irreducibles(l).contains(a),
                  "a is not meet-irreducible in L");
  detail::require(join_irreducibles(l).contains(b),
                  "b is not join-irreducible in L");
  const std::size_t n = l.size();
  const Elem d = n;
  Poset order = Poset::from_relation(n + 1, [&](Elem x, Elem y) {
    if (x == d && y == d) return true;
    if (y == d) return l.leq(x, a);
    if (x == d) return l.leq(b, y);
    return l.leq(x, y);
  });
  CornerExtension ext;
  ext.lattice = Lattice::from_poset(std::move(order));
  if (!l.labels().empty()) {
    auto labels = l.labels();
    labels.push_back("d");
    ext.lattice.set_labels(std::move(labels));
  }
  std::vector<Elem> map(n);
  std::iota(map.begin(), map.end(), Elem{0});
  ext.data = CornerData{a, c, b, d, std::move(map)};
  try {
    validate_corner(l, ext.lattice, ext.data);
    Embedding e(l, ext.lattice, ext.data.embedding);
    detail::require(is_cover_preserving_sublattice(e),
                    "L is not a cover-preserving sublattice of K");
  } catch (const PreconditionFailed& err) {
    throw InvariantViolation(std::string("corner insertion: ") + err.what());
  }
  return ext;
}

/// ε(β): the transitive closure of β ∪ γ, where γ is the congruence of the
/// square S = {a, c, d, b} extending β restricted to {a, c, b}.
inline Congruence epsilon_extend(const Lattice& l, const Lattice& k,
                                 const CornerData& data, const Congruence& beta) {
  detail::require(beta.size() == l.size(), "β has the wrong size");
  detail::require(is_congruence(l, beta), "β is not a congruence of L");
  Embedding e(l, k, data.embedding);
  const Elem a = e(data.a), c = e(data.c), b = e(data.b), d = data.d;
  const bool ac = beta.related(data.a, data.c);
  const bool cb = beta.related(data.c, data.b);
  detail::UnionFind uf(k.size());
  // β, carried into K.
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = x + 1; y < l.size(); ++y)
      if (beta.related(x, y)) uf.unite(e(x), e(y));
  // γ on the square: opposite edges are collapsed together.
  if (ac) {
    uf.unite(a, c);
    uf.unite(d, b);
  }
  if (cb) {
    uf.unite(c, b);
    uf.unite(a, d);
  }
  Congruence delta = uf.partition();
  detail::ensure(is_congruence(k, delta), "ε(β) is not a congruence of K");
  detail::ensure(restriction(delta, e) == beta,
                 "ε(β) restricted to L differs from β");
  return delta;
}

/// ε and restriction are mutually inverse order isomorphisms between Con L
/// and Con K.
inline bool verify_corner_lemma(const Lattice& l, const Lattice& k,
                                const CornerData& data) {
  validate_corner(l, k, data);
  Embedding e(l, k, data.embedding);
  CongruenceLattice con_l = all_congruences(l);
  CongruenceLattice con_k = all_congruences(k);
  detail::ensure(con_l.members.size() == con_k.members.size(),
                 "Con L and Con K differ in size");
  std::vector<Congruence> eps;
  for (const auto& beta : con_l.members) {
    Congruence delta = epsilon_extend(l, k, data, beta);
    detail::ensure(con_k.index_of(delta).has_value(),
                   "ε(β) is not among the congruences of K");
    eps.push_back(delta);
  }
  for (const auto& theta : con_k.members) {
    Congruence r = restriction(theta, e);
    auto i = con_l.index_of(r);
    detail::ensure(i.has_value(), "restriction is not a congruence of L");
    detail::ensure(eps[*i] == theta, "ε ∘ restriction is not the identity");
  }
  for (std::size_t i = 0; i < eps.size(); ++i)
    for (std::size_t j = 0; j < eps.size(); ++j)
      detail::ensure(con_l.members[i].refines(con_l.members[j]) ==
                         eps[i].refines(eps[j]),
                     "ε is not an order isomorphism");
  return true;
}

}  // namespace faigle
