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
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "faigle/elemset.hpp"

namespace faigle {

using ElemPair = std::pair<Elem, Elem>;

/// A finite partial order on {0, ..., n-1}.
///
/// The order is materialized as principal down-sets and up-sets, so `leq` is
/// a single bit test. Instances are immutable once built; all validation
/// happens in the factories.
class Poset {
 public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of `covers` (pairs lower, upper).
  /// Throws NotAPoset if the pairs contain a cycle.
  static Poset from_covers(std::size_t n, std::span<const ElemPair> covers) {
    ElemSet::check_capacity(n);
    std::vector<ElemSet> up(n);
    for (Elem x = 0; x < n; ++x) up[x].insert(x);
    for (auto [lo, hi] : covers) {
      check_index(lo, n);
      check_index(hi, n);
      if (lo == hi)
        throw NotAPoset("cover " + std::to_string(lo) + " " +
                        std::to_string(hi) + " relates an element to itself");
      up[lo].insert(hi);
    }
    // Warshall with bitset rows: if k >= x then everything >= k is >= x.
    for (Elem k = 0; k < n; ++k)
      for (Elem x = 0; x < n; ++x)
        if (up[x].contains(k)) up[x] |= up[k];
    return from_up_sets(std::move(up));
  }

  static Poset from_covers(std::size_t n,
                           std::initializer_list<ElemPair> covers) {
    std::vector<ElemPair> v(covers);
    return from_covers(n, std::span<const ElemPair>(v));
  }

  /// Builds a poset from an arbitrary relation predicate. The predicate must
  /// already be reflexive, antisymmetric and transitive; NotAPoset otherwise.
  static Poset from_relation(std::size_t n,
                             const std::function<bool(Elem, Elem)>& leq) {
    ElemSet::check_capacity(n);
    std::vector<ElemSet> up(n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (leq(x, y)) up[x].insert(y);
    for (Elem x = 0; x < n; ++x) {
      if (!up[x].contains(x))
        throw NotAPoset("relation is not reflexive at " + std::to_string(x));
      for (Elem y : up[x].elements())
        if (!up[y].subset_of(up[x]))
          throw NotAPoset("relation is not transitive through " +
                          std::to_string(y));
    }
    return from_up_sets(std::move(up));
  }

  static Poset chain(std::size_t n) {
    std::vector<ElemPair> covers;
    for (Elem x = 0; x + 1 < n; ++x) covers.emplace_back(x, x + 1);
    return from_covers(n, covers);
  }

  static Poset antichain(std::size_t n) {
    return from_covers(n, std::span<const ElemPair>{});
  }

  std::size_t size() const { return down_.size(); }

  bool leq(Elem x, Elem y) const { return down_[y].contains(x); }
  bool less(Elem x, Elem y) const { return x != y && leq(x, y); }
  bool comparable(Elem x, Elem y) const { return leq(x, y) || leq(y, x); }

  const ElemSet& down_set(Elem u) const {
    check_index(u, size());
    return down_[u];
  }
  ElemSet strict_down_set(Elem u) const {
    ElemSet s = down_set(u);
    s.erase(u);
    return s;
  }
  const ElemSet& up_set(Elem u) const {
    check_index(u, size());
    return up_[u];
  }
  ElemSet strict_up_set(Elem u) const {
    ElemSet s = up_set(u);
    s.erase(u);
    return s;
  }

  ElemSet ground() const { return ElemSet::range(size()); }

  bool is_down_set(const ElemSet& x) const {
    bool ok = x.subset_of(ground());
    x.for_each([&](Elem e) { ok = ok && down_[e].subset_of(x); });
    return ok;
  }

  /// Cover pairs (lower, upper), sorted lexicographically.
  std::vector<ElemPair> covers() const {
    std::vector<ElemPair> out;
    for (Elem x = 0; x < size(); ++x)
      for (Elem y : upper_covers(x).elements()) out.emplace_back(x, y);
    return out;
  }

  ElemSet upper_covers(Elem x) const {
    ElemSet above = strict_up_set(x);
    ElemSet result;
    above.for_each([&](Elem y) {
      if ((strict_down_set(y) & above).empty()) result.insert(y);
    });
    return result;
  }

  ElemSet lower_covers(Elem x) const {
    ElemSet below = strict_down_set(x);
    ElemSet result;
    below.for_each([&](Elem y) {
      if ((strict_up_set(y) & below).empty()) result.insert(y);
    });
    return result;
  }

  bool is_cover(Elem x, Elem y) const { return upper_covers(x).contains(y); }

  ElemSet minimal_elements(const ElemSet& among) const {
    ElemSet out;
    among.for_each([&](Elem x) {
      if ((strict_down_set(x) & among).empty()) out.insert(x);
    });
    return out;
  }
  ElemSet maximal_elements(const ElemSet& among) const {
    ElemSet out;
    among.for_each([&](Elem x) {
      if ((strict_up_set(x) & among).empty()) out.insert(x);
    });
    return out;
  }

  bool is_chain(const ElemSet& x) const {
    bool ok = true;
    x.for_each([&](Elem a) {
      x.for_each([&](Elem b) { ok = ok && comparable(a, b); });
    });
    return ok;
  }

  /// Maximum antichain size. By Dilworth's theorem this is n minus a maximum
  /// matching in the bipartite graph of strict comparabilities.
  std::size_t width() const {
    const std::size_t n = size();
    std::vector<std::size_t> match_of_upper(n, n);
    std::size_t matched = 0;
    for (Elem x = 0; x < n; ++x) {
      std::vector<char> seen(n, 0);
      if (augment(x, seen, match_of_upper)) ++matched;
    }
    return n - matched;
  }

  /// |{(x, y) : x <= y}|, reflexive pairs included.
  std::size_t comparable_pair_count() const {
    std::size_t k = 0;
    for (const auto& d : down_) k += d.size();
    return k;
  }

  /// The subposet induced on `members`, reindexed 0..|members|-1 in
  /// increasing order of the original index.
  Poset induced(const ElemSet& members) const {
    std::vector<Elem> idx = members.elements();
    Poset p = from_relation(idx.size(), [&](Elem i, Elem j) {
      return leq(idx[i], idx[j]);
    });
    if (!labels_.empty()) {
      std::vector<std::string> labels;
      for (Elem x : idx) labels.push_back(labels_[x]);
      p.labels_ = std::move(labels);
    }
    return p;
  }

  /// Elements sorted so that x < y implies x appears before y.
  std::vector<Elem> linear_extension() const {
    std::vector<Elem> order(size());
    for (Elem x = 0; x < size(); ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
      return down_[a].size() < down_[b].size();
    });
    return order;
  }

  /// Optional display names. Empty vector means "use indices".
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != size())
      throw PreconditionFailed("label count does not match poset size");
    labels_ = std::move(labels);
  }
  std::string label(Elem x) const {
    return labels_.empty() || labels_[x].empty() ? std::to_string(x)
                                                 : labels_[x];
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.down_ == b.down_;
  }

  static void check_index(Elem u, std::size_t n) {
    if (u >= n)
      throw IndexOutOfRange("element " + std::to_string(u) +
                            " out of range for size " + std::to_string(n));
  }

 private:
  static Poset from_up_sets(std::vector<ElemSet> up) {
    const std::size_t n = up.size();
    Poset p;
    p.up_ = std::move(up);
    p.down_.assign(n, ElemSet{});
    for (Elem x = 0; x < n; ++x)
      p.up_[x].for_each([&](Elem y) { p.down_[y].insert(x); });
    for (Elem x = 0; x < n; ++x) {
      ElemSet both = p.up_[x] & p.down_[x];
      if (both.size() != 1)
        throw NotAPoset("cycle through element " + std::to_string(x));
    }
    return p;
  }

  bool augment(Elem x, std::vector<char>& seen,
               std::vector<std::size_t>& match_of_upper) const {
    const std::size_t n = size();
    for (Elem y : strict_up_set(x).elements()) {
      if (seen[y]) continue;
      seen[y] = 1;
      if (match_of_upper[y] == n ||
          augment(match_of_upper[y], seen, match_of_upper)) {
        match_of_upper[y] = x;
        return true;
      }
    }
    return false;
  }

  std::vector<ElemSet> down_;
  std::vector<ElemSet> up_;
  std::vector<std::string> labels_;
};

}  // namespace faigle
