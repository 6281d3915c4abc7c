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
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "faigle/congruence.hpp"
#include "faigle/geometry.hpp"
#include "faigle/rectangular_extension.hpp"

namespace faigle::testkit {

enum class Filter { kAll, kSemimodular, kSlimSemimodular };

inline const char* filter_name(Filter f) {
  switch (f) {
    case Filter::kAll:
      return "all";
    case Filter::kSemimodular:
      return "semimodular";
    case Filter::kSlimSemimodular:
      return "slim-semimodular";
  }
  return "?";
}

inline Filter parse_filter(const std::string& s) {
  if (s == "all") return Filter::kAll;
  if (s == "semimodular") return Filter::kSemimodular;
  if (s == "slim-semimodular") return Filter::kSlimSemimodular;
  throw PreconditionFailed("unknown filter '" + s + "'");
}

inline bool passes(Filter f, const Lattice& l) {
  switch (f) {
    case Filter::kAll:
      return true;
    case Filter::kSemimodular:
      return is_semimodular(l);
    case Filter::kSlimSemimodular:
      return is_semimodular(l) && is_slim(l);
  }
  return false;
}

/// Hard upper bound for the canonical-extension enumerator.
inline constexpr std::size_t kMaxEnumerationSize = 11;

struct EnumConfig {
  std::size_t max_elements = 10;
  Filter filter = Filter::kAll;
  std::uint64_t seed = 1;
};

// ---------------------------------------------------------------------------
// Canonical forms by individualization and refinement.

namespace detail {

using Colours = std::vector<std::size_t>;

// Splits colour classes by the multisets of colours of lower and upper covers
// until stable. New colours are ranks of sorted signatures, so the result is
// invariant under relabelling.
inline Colours refine(const Lattice& l, Colours colours) {
  const std::size_t n = l.size();
  std::size_t classes = std::set<std::size_t>(colours.begin(), colours.end()).size();
  while (true) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (Elem x = 0; x < n; ++x) {
      sig[x].push_back(colours[x]);
      std::vector<std::size_t> lo, up;
      l.lower_covers(x).for_each([&](Elem y) { lo.push_back(colours[y]); });
      l.upper_covers(x).for_each([&](Elem y) { up.push_back(colours[y]); });
      std::sort(lo.begin(), lo.end());
      std::sort(up.begin(), up.end());
      sig[x].push_back(lo.size());
      sig[x].insert(sig[x].end(), lo.begin(), lo.end());
      sig[x].push_back(up.size());
      sig[x].insert(sig[x].end(), up.begin(), up.end());
    }
    std::vector<std::vector<std::size_t>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Elem x = 0; x < n; ++x)
      colours[x] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[x]) -
          distinct.begin());
    if (distinct.size() == classes) return colours;
    classes = distinct.size();
  }
}

inline std::string encode(const Lattice& l, const Colours& discrete) {
  const std::size_t n = l.size();
  std::vector<Elem> at(n);
  for (Elem x = 0; x < n; ++x) at[discrete[x]] = x;
  std::string out(n * n, '0');
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (l.leq(at[i], at[j])) out[i * n + j] = '1';
  return out;
}

inline void search(const Lattice& l, const Colours& colours,
                   std::string& best) {
  const std::size_t n = l.size();
  // First (smallest colour) non-singleton cell.
  std::vector<std::size_t> count(n, 0);
  for (auto c : colours) ++count[c];
  std::size_t cell = n;
  for (std::size_t c = 0; c < n; ++c)
    if (count[c] > 1) {
      cell = c;
      break;
    }
  if (cell == n) {
    std::string code = encode(l, colours);
    if (best.empty() || code < best) best = std::move(code);
    return;
  }
  for (Elem v = 0; v < n; ++v) {
    if (colours[v] != cell) continue;
    Colours split(n);
    // Individualized vertex sorts before the rest of its cell.
    for (Elem x = 0; x < n; ++x)
      split[x] = 2 * colours[x] + ((colours[x] == cell && x != v) ? 1 : 0);
    std::vector<std::size_t> d(split);
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    for (auto& c : split)
      c = static_cast<std::size_t>(std::lower_bound(d.begin(), d.end(), c) -
                                   d.begin());
    search(l, refine(l, split), best);
  }
}

}  // namespace detail

/// A string that is equal for two lattices iff they are isomorphic: the
/// lexicographically least order matrix over all labellings reachable by
/// individualization-refinement.
inline std::string canonical_form(const Lattice& l) {
  std::vector<std::size_t> h = heights(l);
  detail::Colours start(l.size());
  for (Elem x = 0; x < l.size(); ++x) start[x] = h[x];
  std::string best;
  detail::search(l, detail::refine(l, start), best);
  return best;
}

// ---------------------------------------------------------------------------
// Canonical extension enumerator.

namespace detail {

// All antichains of `candidates`, as ElemSets, via include/exclude recursion.
inline void antichains(const Poset& p, const std::vector<Elem>& candidates,
                       std::size_t i, ElemSet current, ElemSet blocked,
                       std::vector<ElemSet>& out) {
  if (i == candidates.size()) {
    out.push_back(current);
    return;
  }
  const Elem x = candidates[i];
  antichains(p, candidates, i + 1, current, blocked, out);
  if (!blocked.contains(x)) {
    ElemSet c = current;
    c.insert(x);
    antichains(p, candidates, i + 1, c,
               blocked | p.up_set(x) | p.down_set(x), out);
  }
}

// Lattices with one more element obtained by adding a new atom whose strict
// up-set is the filter generated by `generators`, if that yields a lattice.
inline std::optional<Lattice> add_atom(const Lattice& m,
                                       const ElemSet& generators) {
  const std::size_t n = m.size();
  ElemSet above;
  generators.for_each([&](Elem g) { above |= m.order().up_set(g); });
  // Meets inside the new up-set must stay in it or drop to the bottom.
  bool ok = true;
  above.for_each([&](Elem x) {
    above.for_each([&](Elem y) {
      Elem z = m.meet(x, y);
      ok = ok && (above.contains(z) || z == m.bottom());
    });
  });
  if (!ok) return std::nullopt;
  // Joins with the new atom: above ∩ ↑y needs a least element.
  for (Elem y = 0; y < n && ok; ++y) {
    if (y == m.bottom()) continue;
    ElemSet bounds = above & m.order().up_set(y);
    if (bounds.empty()) {
      ok = false;
      break;
    }
    Elem least = m.meet_all(bounds);
    ok = bounds.contains(least);
  }
  if (!ok) return std::nullopt;
  const Elem a = n;
  Poset order = Poset::from_relation(n + 1, [&](Elem x, Elem y) {
    if (x == a) return y == a || above.contains(y);
    if (y == a) return x == m.bottom();
    return m.leq(x, y);
  });
  return Lattice::from_poset(std::move(order));
}

}  // namespace detail

/// All lattices with 1..max_elements elements up to isomorphism, grouped by
/// size and sorted by canonical form within a size. Every lattice with
/// n + 1 >= 3 elements arises from an n-element lattice by adding an atom;
/// isomorphic copies are merged by canonical form.
inline std::vector<Lattice> enumerate_lattices(const EnumConfig& cfg) {
  if (cfg.max_elements > kMaxEnumerationSize)
    throw BoundExceeded("enumeration is limited to " +
                        std::to_string(kMaxEnumerationSize) + " elements");
  std::vector<Lattice> out;
  if (cfg.max_elements == 0) return out;
  std::vector<Lattice> level{Lattice::from_covers(1, {})};
  auto emit = [&](const std::vector<Lattice>& ls) {
    for (const auto& l : ls)
      if (passes(cfg.filter, l)) out.push_back(l);
  };
  emit(level);
  if (cfg.max_elements >= 2) {
    level = {Lattice::from_covers(2, {{0, 1}})};
    emit(level);
  }
  for (std::size_t n = 3; n <= cfg.max_elements; ++n) {
    std::map<std::string, Lattice> next;
    for (const auto& m : level) {
      std::vector<Elem> candidates;
      for (Elem x = 0; x < m.size(); ++x)
        if (x != m.bottom()) candidates.push_back(x);
      std::vector<ElemSet> gens;
      detail::antichains(m.order(), candidates, 0, {}, {}, gens);
      for (const auto& g : gens) {
        if (g.empty()) continue;
        auto l = detail::add_atom(m, g);
        if (!l) continue;
        std::string key = canonical_form(*l);
        next.emplace(std::move(key), std::move(*l));
      }
    }
    level.clear();
    for (auto& [key, l] : next) level.push_back(std::move(l));
    emit(level);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independent brute-force pass: every naturally labelled order on the
// non-bound elements, lattice check by direct bound search on a boolean
// matrix, isomorphism classes by minimizing over all permutations.

namespace detail {

using Matrix = std::vector<std::vector<char>>;

inline bool brute_is_lattice(const Matrix& leq) {
  const std::size_t n = leq.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool has_lub = false, has_glb = false;
      for (std::size_t z = 0; z < n && !(has_lub && has_glb); ++z) {
        if (!has_lub && leq[x][z] && leq[y][z]) {
          bool least = true;
          for (std::size_t w = 0; w < n && least; ++w)
            if (leq[x][w] && leq[y][w] && !leq[z][w]) least = false;
          has_lub = least;
        }
        if (!has_glb && leq[z][x] && leq[z][y]) {
          bool greatest = true;
          for (std::size_t w = 0; w < n && greatest; ++w)
            if (leq[w][x] && leq[w][y] && !leq[w][z]) greatest = false;
          has_glb = greatest;
        }
      }
      if (!has_lub || !has_glb) return false;
    }
  return true;
}

inline std::string brute_canonical(const Matrix& leq, std::size_t fixed_front,
                                   std::size_t fixed_back) {
  const std::size_t n = leq.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::string best;
  do {
    std::string code(n * n, '0');
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[perm[i]][perm[j]]) code[i * n + j] = '1';
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(fixed_front),
                                 perm.end() - static_cast<std::ptrdiff_t>(fixed_back)));
  return best;
}

// Calls f(leq) for every transitive relation on n points whose strict pairs
// all go from a smaller to a larger index (every poset has such a labelling).
inline void natural_orders(std::size_t n,
                           const std::function<void(const Matrix&)>& f) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Matrix leq(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) leq[pairs[k].first][pairs[k].second] = 1;
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        if (leq[i][j])
          for (std::size_t k = 0; k < n; ++k)
            if (leq[j][k] && !leq[i][k]) {
              transitive = false;
              break;
            }
    if (transitive) f(leq);
  }
}

inline Lattice lattice_from_matrix(const Matrix& leq) {
  return Lattice::from_poset(Poset::from_relation(
      leq.size(), [&](Elem x, Elem y) { return leq[x][y] != 0; }));
}

}  // namespace detail

/// Representatives of all lattices with exactly n elements up to
/// isomorphism, found by brute force. Practical for n <= 8.
inline std::vector<Lattice> brute_force_lattices(std::size_t n) {
  if (n > 8) throw BoundExceeded("brute-force lattice pass limited to 8");
  if (n == 0) return {};
  if (n == 1) return {Lattice::from_covers(1, {})};
  const std::size_t m = n - 2;
  std::map<std::string, detail::Matrix> classes;
  detail::natural_orders(m, [&](const detail::Matrix& mid) {
    detail::Matrix leq(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      leq[0][i] = 1;
      leq[i][n - 1] = 1;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) leq[i + 1][j + 1] = mid[i][j];
    if (!detail::brute_is_lattice(leq)) return;
    classes.emplace(detail::brute_canonical(leq, 1, 1), leq);
  });
  std::vector<Lattice> out;
  for (const auto& [key, leq] : classes)
    out.push_back(detail::lattice_from_matrix(leq));
  return out;
}

/// All posets with exactly n elements up to isomorphism (brute force,
/// n <= 6).
inline std::vector<Poset> enumerate_posets(std::size_t n) {
  if (n > 6) throw BoundExceeded("poset enumeration limited to 6 elements");
  std::map<std::string, detail::Matrix> classes;
  detail::natural_orders(n, [&](const detail::Matrix& leq) {
    classes.emplace(detail::brute_canonical(leq, 0, 0), leq);
  });
  std::vector<Poset> out;
  for (const auto& [key, leq] : classes)
    out.push_back(Poset::from_relation(
        n, [&](Elem x, Elem y) { return leq[x][y] != 0; }));
  return out;
}

// ---------------------------------------------------------------------------

/// Every down-set of P (including ∅ and P), in canonical order.
inline std::vector<ElemSet> all_down_sets(const Poset& p) {
  std::set<ElemSet> seen{ElemSet{}};
  std::vector<ElemSet> frontier{ElemSet{}};
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (const auto& d : frontier) {
      for (Elem u = 0; u < p.size(); ++u) {
        if (d.contains(u) || !p.strict_down_set(u).subset_of(d)) continue;
        ElemSet e = d;
        e.insert(u);
        if (seen.insert(e).second) next.push_back(e);
        if (seen.size() > (std::size_t{1} << 20))
          throw BoundExceeded("too many down-sets");
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Random families satisfying F∩, F↓ and Pr: the mandatory members (∅, P,
/// every ↓u and ⇓u) plus a random selection of other down-sets, closed under
/// intersection. Each family draws its own inclusion probability so that
/// sparse and dense families both occur. Reproducible for a given seed.
inline std::vector<std::vector<ElemSet>> random_closure_candidates(
    const Poset& p, std::size_t count, std::uint64_t seed) {
  std::vector<std::vector<ElemSet>> out;
  if (count == 0) return out;
  const std::vector<ElemSet> downs = all_down_sets(p);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (std::size_t sample = 0; sample < count; ++sample) {
    std::set<ElemSet> family{ElemSet{}, p.ground()};
    for (Elem u = 0; u < p.size(); ++u) {
      family.insert(p.down_set(u));
      family.insert(p.strict_down_set(u));
    }
    const double q = density(rng);
    std::bernoulli_distribution pick(q);
    for (const auto& d : downs)
      if (pick(rng)) family.insert(d);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<ElemSet> members(family.begin(), family.end());
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          grew |= family.insert(members[i] & members[j]).second;
    }
    out.emplace_back(family.begin(), family.end());
  }
  return out;
}

/// Every partition of the elements that is compatible with join and meet,
/// checked against the definition pair by pair. The oracle for
/// all_congruences. |L| <= 8.
inline std::vector<Congruence> congruences_by_partition_filter(
    const Lattice& l) {
  const std::size_t n = l.size();
  if (n > 8) throw BoundExceeded("partition filter limited to 8 elements");
  std::vector<Congruence> out;
  std::vector<std::size_t> rgs(n, 0);
  // Restricted growth strings enumerate set partitions.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                           std::size_t used) {
    if (i == n) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          if (rgs[x] != rgs[y]) continue;
          for (Elem u = 0; u < n; ++u)
            for (Elem v = 0; v < n; ++v) {
              if (rgs[u] != rgs[v]) continue;
              if (rgs[l.join(x, u)] != rgs[l.join(y, v)] ||
                  rgs[l.meet(x, u)] != rgs[l.meet(y, v)])
                return;
            }
        }
      out.emplace_back(rgs);
      return;
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      rgs[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  if (n > 0) {
    rgs[0] = 0;
    rec(1, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace faigle::testkit
