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
#include <cstdint>
#include <functional>
#include <tuple>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "faigle/poset.hpp"

namespace faigle {

/// A finite lattice: a poset together with its join and meet tables.
///
/// Tables are computed once from the order by scanning upper and lower bound
/// sets; construction fails with NotALattice naming the first pair that has
/// no least upper or greatest lower bound.
class Lattice {
 public:
  Lattice() = default;

  static Lattice from_poset(Poset order) {
    const std::size_t n = order.size();
    if (n == 0) throw NotALattice("the empty poset is not a lattice");
    Lattice l;
    l.order_ = std::move(order);
    l.join_.assign(n * n, 0);
    l.meet_.assign(n * n, 0);
    std::vector<std::size_t> down_size(n), up_size(n);
    for (Elem x = 0; x < n; ++x) {
      down_size[x] = l.order_.down_set(x).size();
      up_size[x] = l.order_.up_set(x).size();
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x; y < n; ++y) {
        Elem j = least_of(l.order_, l.order_.up_set(x) & l.order_.up_set(y),
                          down_size, true);
        Elem m = least_of(l.order_,
                          l.order_.down_set(x) & l.order_.down_set(y),
                          up_size, false);
        if (j == kMaxElements)
          throw NotALattice("elements " + std::to_string(x) + " and " +
                            std::to_string(y) + " have no least upper bound");
        if (m == kMaxElements)
          throw NotALattice("elements " + std::to_string(x) + " and " +
                            std::to_string(y) +
                            " have no greatest lower bound");
        l.join_[x * n + y] = l.join_[y * n + x] = static_cast<Index>(j);
        l.meet_[x * n + y] = l.meet_[y * n + x] = static_cast<Index>(m);
      }
    }
    l.bottom_ = 0;
    l.top_ = 0;
    for (Elem x = 1; x < n; ++x) {
      l.bottom_ = l.meet(l.bottom_, x);
      l.top_ = l.join(l.top_, x);
    }
    l.upper_.resize(n);
    l.lower_.resize(n);
    for (Elem x = 0; x < n; ++x) {
      l.upper_[x] = l.order_.upper_covers(x);
      l.lower_[x] = l.order_.lower_covers(x);
    }
    return l;
  }

  static Lattice from_covers(std::size_t n, std::span<const ElemPair> covers) {
    return from_poset(Poset::from_covers(n, covers));
  }
  static Lattice from_covers(std::size_t n,
                             std::initializer_list<ElemPair> covers) {
    return from_poset(Poset::from_covers(n, covers));
  }

  std::size_t size() const { return order_.size(); }
  const Poset& order() const { return order_; }

  bool leq(Elem x, Elem y) const { return order_.leq(x, y); }
  bool less(Elem x, Elem y) const { return order_.less(x, y); }

  Elem join(Elem x, Elem y) const {
    check(x);
    check(y);
    return join_[x * size() + y];
  }
  Elem meet(Elem x, Elem y) const {
    check(x);
    check(y);
    return meet_[x * size() + y];
  }

  /// Join of a set; the bottom for the empty set.
  Elem join_all(const ElemSet& xs) const {
    Elem acc = bottom_;
    xs.for_each([&](Elem x) { acc = join(acc, x); });
    return acc;
  }
  /// Meet of a set; the top for the empty set.
  Elem meet_all(const ElemSet& xs) const {
    Elem acc = top_;
    xs.for_each([&](Elem x) { acc = meet(acc, x); });
    return acc;
  }

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  const ElemSet& upper_covers(Elem x) const {
    check(x);
    return upper_[x];
  }
  const ElemSet& lower_covers(Elem x) const {
    check(x);
    return lower_[x];
  }
  bool is_cover(Elem x, Elem y) const { return upper_covers(x).contains(y); }

  std::vector<ElemPair> covers() const {
    std::vector<ElemPair> out;
    for (Elem x = 0; x < size(); ++x)
      for (Elem y : upper_[x].elements()) out.emplace_back(x, y);
    return out;
  }

  const std::vector<std::string>& labels() const { return order_.labels(); }
  void set_labels(std::vector<std::string> labels) {
    order_.set_labels(std::move(labels));
  }

 private:
  using Index = std::uint16_t;

  void check(Elem x) const { Poset::check_index(x, size()); }

  // The least element of `bounds` (greatest when !least), or kMaxElements.
  // Uses the size of principal down-sets (up-sets) to pick the only possible
  // candidate, then verifies it.
  static Elem least_of(const Poset& p, const ElemSet& bounds,
                       const std::vector<std::size_t>& rank, bool least) {
    Elem best = kMaxElements;
    bounds.for_each([&](Elem z) {
      if (best == kMaxElements || rank[z] < rank[best]) best = z;
    });
    if (best == kMaxElements) return best;
    const ElemSet& cone = least ? p.up_set(best) : p.down_set(best);
    return bounds.subset_of(cone) ? best : kMaxElements;
  }

  Poset order_;
  std::vector<Index> join_;
  std::vector<Index> meet_;
  std::vector<ElemSet> upper_;
  std::vector<ElemSet> lower_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// Nonzero elements with exactly one lower cover.
inline ElemSet join_irreducibles(const Lattice& l) {
  ElemSet out;
  for (Elem x = 0; x < l.size(); ++x)
    if (l.lower_covers(x).size() == 1) out.insert(x);
  return out;
}

/// Non-top elements with exactly one upper cover.
inline ElemSet meet_irreducibles(const Lattice& l) {
  ElemSet out;
  for (Elem x = 0; x < l.size(); ++x)
    if (l.upper_covers(x).size() == 1) out.insert(x);
  return out;
}

inline ElemSet atoms(const Lattice& l) { return l.upper_covers(l.bottom()); }

/// Jir L as a poset in its own right. Ground index i stands for the lattice
/// element `elements[i]`; indices follow increasing lattice index.
struct JirPoset {
  Poset poset;
  std::vector<Elem> elements;

  /// Ground index of lattice element x (which must be join-irreducible).
  Elem index_of(Elem x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || *it != x)
      throw PreconditionFailed("element " + std::to_string(x) +
                               " is not join-irreducible");
    return static_cast<Elem>(it - elements.begin());
  }

  ElemSet to_lattice(const ElemSet& ground_set) const {
    ElemSet out;
    ground_set.for_each([&](Elem i) { out.insert(elements[i]); });
    return out;
  }
  ElemSet to_ground(const ElemSet& lattice_set) const {
    ElemSet out;
    lattice_set.for_each([&](Elem x) { out.insert(index_of(x)); });
    return out;
  }
};

inline JirPoset jir_poset(const Lattice& l) {
  ElemSet jir = join_irreducibles(l);
  return JirPoset{l.order().induced(jir), jir.elements()};
}

/// Height of every element: the length of the longest chain from the bottom.
inline std::vector<std::size_t> heights(const Lattice& l) {
  std::vector<std::size_t> h(l.size(), 0);
  for (Elem x : l.order().linear_extension())
    l.lower_covers(x).for_each([&](Elem y) { h[x] = std::max(h[x], h[y] + 1); });
  return h;
}

/// Longest chain length, |C| - 1.
inline std::size_t length(const Lattice& l) { return heights(l)[l.top()]; }

/// True iff every maximal chain has the same length (the Jordan-Dedekind
/// chain condition). Shortest and longest bottom-to-x chains are compared for
/// every x.
inline bool maximal_chains_have_equal_length(const Lattice& l) {
  std::vector<std::size_t> shortest(l.size(), 0), longest(l.size(), 0);
  for (Elem x : l.order().linear_extension()) {
    bool first = true;
    l.lower_covers(x).for_each([&](Elem y) {
      shortest[x] = first ? shortest[y] + 1
                          : std::min(shortest[x], shortest[y] + 1);
      longest[x] = std::max(longest[x], longest[y] + 1);
      first = false;
    });
  }
  return shortest[l.top()] == longest[l.top()];
}

/// A witness (x, y) of x ∧ y ≺ x but not y ≺ x ∨ y, if any.
inline std::optional<ElemPair> semimodularity_violation(const Lattice& l) {
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      if (l.is_cover(l.meet(x, y), x) && !l.is_cover(y, l.join(x, y)))
        return ElemPair{x, y};
  return std::nullopt;
}

inline bool is_semimodular(const Lattice& l) {
  return !semimodularity_violation(l).has_value();
}

inline bool is_chain(const Lattice& l) {
  return l.order().is_chain(l.order().ground());
}

inline bool is_geometric(const Lattice& l) {
  return is_semimodular(l) && join_irreducibles(l) == atoms(l);
}

inline bool is_slim(const Lattice& l) {
  return jir_poset(l).poset.width() <= 2;
}

/// Partition of Jir L into two nonempty chains with no comparable cross
/// pair, if one exists. Exhaustive over 2-colourings.
inline std::optional<std::pair<ElemSet, ElemSet>> rectangular_split(
    const Lattice& l) {
  const std::vector<Elem> jir = join_irreducibles(l).elements();
  const std::size_t m = jir.size();
  if (m < 2) return std::nullopt;
  if (m > 30)
    throw CapacityExceeded("rectangular split search limited to 30 "
                           "join-irreducibles");
  const Poset& p = l.order();
  // The first join-irreducible always goes to the first chain.
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (m - 1)); ++mask) {
    ElemSet c, d;
    c.insert(jir[0]);
    for (std::size_t i = 1; i < m; ++i) {
      if ((mask >> (i - 1)) & 1U)
        d.insert(jir[i]);
      else
        c.insert(jir[i]);
    }
    if (d.empty() || !p.is_chain(c) || !p.is_chain(d)) continue;
    bool separated = true;
    c.for_each([&](Elem x) {
      d.for_each([&](Elem y) { separated = separated && !p.comparable(x, y); });
    });
    if (separated) return std::pair{c, d};
  }
  return std::nullopt;
}

inline bool is_slim_rectangular(const Lattice& l) {
  return is_semimodular(l) && rectangular_split(l).has_value();
}

/// An injective, order-preserving and order-reflecting map from the elements
/// of `source` into `target`. Holds references; the lattices must outlive it.
class Embedding {
 public:
  Embedding(const Lattice& source, const Lattice& target,
            std::vector<Elem> map)
      : source_(&source), target_(&target), map_(std::move(map)) {
    detail::require(map_.size() == source.size(),
                    "embedding map size differs from source size");
    std::vector<char> hit(target.size(), 0);
    for (Elem x : map_) {
      Poset::check_index(x, target.size());
      detail::require(!hit[x], "embedding map is not injective");
      hit[x] = 1;
    }
    for (Elem x = 0; x < source.size(); ++x)
      for (Elem y = 0; y < source.size(); ++y)
        detail::require(source.leq(x, y) == target.leq(map_[x], map_[y]),
                        "embedding map is not an order embedding at (" +
                            std::to_string(x) + ", " + std::to_string(y) + ")");
  }

  // Stores pointers, so temporaries are rejected.
  Embedding(Lattice&&, const Lattice&, std::vector<Elem>) = delete;
  Embedding(const Lattice&, Lattice&&, std::vector<Elem>) = delete;
  Embedding(Lattice&&, Lattice&&, std::vector<Elem>) = delete;
  static Embedding identity(Lattice&&) = delete;

  static Embedding identity(const Lattice& l) {
    std::vector<Elem> map(l.size());
    for (Elem x = 0; x < l.size(); ++x) map[x] = x;
    return Embedding(l, l, std::move(map));
  }

  const Lattice& source() const { return *source_; }
  const Lattice& target() const { return *target_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem x) const { return map_.at(x); }

  ElemSet image() const { return ElemSet(map_); }

 private:
  const Lattice* source_;
  const Lattice* target_;
  std::vector<Elem> map_;
};

/// The image is closed under the target's meet and meets agree.
inline bool is_meet_subsemilattice(const Embedding& e) {
  const Lattice& s = e.source();
  const Lattice& t = e.target();
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = x + 1; y < s.size(); ++y)
      if (e(s.meet(x, y)) != t.meet(e(x), e(y))) return false;
  return true;
}

inline bool is_sublattice(const Embedding& e) {
  const Lattice& s = e.source();
  const Lattice& t = e.target();
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = x + 1; y < s.size(); ++y)
      if (e(s.meet(x, y)) != t.meet(e(x), e(y)) ||
          e(s.join(x, y)) != t.join(e(x), e(y)))
        return false;
  return true;
}

inline bool is_cover_preserving_sublattice(const Embedding& e) {
  if (!is_sublattice(e)) return false;
  const Lattice& s = e.source();
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y)
      if (s.is_cover(x, y) != e.target().is_cover(e(x), e(y))) return false;
  return true;
}

/// Checks that a meet-subsemilattice of equal length between semimodular
/// lattices is a sublattice. The implication itself is a theorem, so a
/// false result is reported as InvariantViolation.
inline bool wild_sublattice_check(const Embedding& e) {
  detail::require(is_semimodular(e.source()), "source is not semimodular");
  detail::require(is_semimodular(e.target()), "target is not semimodular");
  detail::require(length(e.source()) == length(e.target()),
                  "source and target lengths differ");
  detail::require(is_meet_subsemilattice(e),
                  "embedding is not a meet-subsemilattice");
  detail::ensure(is_sublattice(e),
                 "equal-length semimodular meet-subsemilattice is not a "
                 "sublattice");
  return true;
}

namespace detail {

struct ElementProfile {
  std::size_t height, depth, lower, upper, below, above;
  friend bool operator==(const ElementProfile&,
                         const ElementProfile&) = default;
};

inline std::vector<ElementProfile> profiles(const Lattice& l) {
  std::vector<std::size_t> h = heights(l);
  std::vector<std::size_t> depth(l.size(), 0);
  auto ext = l.order().linear_extension();
  for (auto it = ext.rbegin(); it != ext.rend(); ++it)
    l.upper_covers(*it).for_each(
        [&](Elem y) { depth[*it] = std::max(depth[*it], depth[y] + 1); });
  std::vector<ElementProfile> out(l.size());
  for (Elem x = 0; x < l.size(); ++x)
    out[x] = {h[x],
              depth[x],
              l.lower_covers(x).size(),
              l.upper_covers(x).size(),
              l.order().down_set(x).size(),
              l.order().up_set(x).size()};
  return out;
}

}  // namespace detail

/// A lattice isomorphism L1 -> L2 as an element map, if one exists.
///
/// Backtracking over a linear extension of L1; candidates must share a
/// profile (height, depth, cover degrees, principal ideal/filter sizes) and
/// agree on the order with every element already mapped.
inline std::optional<std::vector<Elem>> find_isomorphism(const Lattice& a,
                                                         const Lattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  auto pa = detail::profiles(a);
  auto pb = detail::profiles(b);
  {
    auto key = [](const detail::ElementProfile& p) {
      return std::tuple(p.height, p.depth, p.lower, p.upper, p.below, p.above);
    };
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t,
                           std::size_t, std::size_t>>
        ka, kb;
    for (auto& p : pa) ka.push_back(key(p));
    for (auto& p : pb) kb.push_back(key(p));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return std::nullopt;
  }
  const std::vector<Elem> order = a.order().linear_extension();
  std::vector<Elem> map(n, kMaxElements);
  std::vector<char> used(n, 0);

  std::function<bool(std::size_t)> place = [&](std::size_t pos) -> bool {
    if (pos == n) return true;
    Elem x = order[pos];
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || !(pa[x] == pb[y])) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < pos && consistent; ++i) {
        Elem w = order[i];
        consistent = a.leq(w, x) == b.leq(map[w], y) &&
                     a.leq(x, w) == b.leq(y, map[w]);
      }
      if (!consistent) continue;
      map[x] = y;
      used[y] = 1;
      if (place(pos + 1)) return true;
      used[y] = 0;
      map[x] = kMaxElements;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map;
}

}  // namespace faigle
