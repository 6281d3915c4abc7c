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
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "faigle/lattice.hpp"

namespace faigle {

/// A finite poset P together with a family F of subsets of P.
///
/// The pair is a Faigle geometry when F is a closure system of down-sets that
/// contains every principal down-set and its strict version, and satisfies the
/// covering property (CP), equivalently the exchange property (FEP). Validity
/// is not enforced on construction: candidate families are built first and
/// checked afterwards. `verified()` records a passed full axiom check.
class FaigleGeometry {
 public:
  FaigleGeometry() = default;

  /// Flats are sorted into canonical ElemSet order and deduplicated.
  FaigleGeometry(Poset ground, std::vector<ElemSet> flats)
      : ground_(std::move(ground)), flats_(std::move(flats)) {
    std::sort(flats_.begin(), flats_.end());
    flats_.erase(std::unique(flats_.begin(), flats_.end()), flats_.end());
    const ElemSet all = ground_.ground();
    for (const auto& f : flats_)
      if (!f.subset_of(all))
        throw PreconditionFailed("flat " + f.to_string() +
                                 " is not a subset of the ground set");
    index_.reserve(flats_.size());
    for (std::size_t i = 0; i < flats_.size(); ++i) index_.emplace(flats_[i], i);
  }

  const Poset& ground() const { return ground_; }
  const std::vector<ElemSet>& flats() const { return flats_; }
  std::size_t size() const { return ground_.size(); }

  bool contains_flat(const ElemSet& x) const { return index_.count(x) != 0; }
  std::optional<std::size_t> index_of(const ElemSet& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool verified() const { return verified_; }

  /// Runs the full axiom check and records the outcome. Defined below.
  bool verify();

  /// Intersection of all flats containing `x`, taken inside the ground set
  /// (so the ground set itself results when no flat contains `x`).
  ElemSet closure_unchecked(const ElemSet& x) const {
    ElemSet acc = ground_.ground();
    for (const auto& f : flats_)
      if (x.subset_of(f)) acc &= f;
    return acc;
  }

  /// For every flat index, the indices of the flats covering it in (F, ⊆).
  const std::vector<std::vector<std::size_t>>& upper_covers() const {
    if (!covers_cached_) {
      covers_.assign(flats_.size(), {});
      for (std::size_t i = 0; i < flats_.size(); ++i) {
        // Flats are sorted by size, so strict supersets come later.
        std::vector<std::size_t> supersets;
        for (std::size_t j = i + 1; j < flats_.size(); ++j)
          if (flats_[i].proper_subset_of(flats_[j])) supersets.push_back(j);
        for (std::size_t j : supersets) {
          bool cover = true;
          for (std::size_t k : supersets) {
            if (k == j) continue;
            if (flats_[k].proper_subset_of(flats_[j])) {
              cover = false;
              break;
            }
          }
          if (cover) covers_[i].push_back(j);
        }
      }
      covers_cached_ = true;
    }
    return covers_;
  }

  bool is_flat_cover(const ElemSet& x, const ElemSet& y) const {
    auto i = index_of(x);
    auto j = index_of(y);
    if (!i || !j) return false;
    const auto& up = upper_covers()[*i];
    return std::find(up.begin(), up.end(), *j) != up.end();
  }

 private:
  Poset ground_;
  std::vector<ElemSet> flats_;
  std::unordered_map<ElemSet, std::size_t, ElemSetHash> index_;
  bool verified_ = false;
  mutable bool covers_cached_ = false;
  mutable std::vector<std::vector<std::size_t>> covers_;
};

/// Closure operator of the family: the intersection of all flats containing
/// `x`. Requires the ground set to be a flat.
inline ElemSet closure(const FaigleGeometry& g, const ElemSet& x) {
  if (!g.contains_flat(g.ground().ground()))
    throw GroundNotInFamily("the ground set is not a member of the family");
  if (!x.subset_of(g.ground().ground()))
    throw IndexOutOfRange("set " + x.to_string() +
                          " is not a subset of the ground set");
  return g.closure_unchecked(x);
}

struct CapWitness {
  /// x ∩ y is not a flat; x == y == ground when the ground set is missing.
  ElemSet x, y;
};
struct DownWitness {
  /// below <= member, member ∈ flat, below ∉ flat.
  ElemSet flat;
  Elem member, below;
};
struct PrWitness {
  /// nullopt: the empty set is missing. Otherwise ↓u (strict == false) or
  /// ⇓u (strict == true) is missing.
  std::optional<Elem> u;
  bool strict = false;
};
struct CpWitness {
  Elem u;
  ElemSet x;
};
struct FepWitness {
  Elem u, v;
  ElemSet s;
};

/// Outcome of checking the five axioms. A witness is present iff the
/// corresponding axiom fails; each is the first failure in scan order
/// (elements ascending, flats in canonical order).
struct AxiomReport {
  bool holds_cap = true;
  bool holds_down = true;
  bool holds_pr = true;
  bool holds_cp = true;
  bool holds_fep = true;
  std::optional<CapWitness> cap_witness;
  std::optional<DownWitness> down_witness;
  std::optional<PrWitness> pr_witness;
  std::optional<CpWitness> cp_witness;
  std::optional<FepWitness> fep_witness;

  /// F∩, F↓, Pr and CP: the first definition of a Faigle geometry.
  bool all_cp() const { return holds_cap && holds_down && holds_pr && holds_cp; }
  /// F∩, F↓, Pr and FEP: the second definition.
  bool all_fep() const {
    return holds_cap && holds_down && holds_pr && holds_fep;
  }
  bool all() const { return all_cp() && holds_fep; }
};

namespace detail {

inline std::optional<CapWitness> cap_violation(const FaigleGeometry& g) {
  const ElemSet all = g.ground().ground();
  if (!g.contains_flat(all)) return CapWitness{all, all};
  const auto& f = g.flats();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!g.contains_flat(f[i] & f[j])) return CapWitness{f[i], f[j]};
  return std::nullopt;
}

inline std::optional<DownWitness> down_violation(const FaigleGeometry& g) {
  for (const auto& flat : g.flats()) {
    std::optional<DownWitness> w;
    flat.for_each([&](Elem x) {
      if (w) return;
      ElemSet missing = g.ground().down_set(x) - flat;
      if (!missing.empty()) w = DownWitness{flat, x, missing.first()};
    });
    if (w) return w;
  }
  return std::nullopt;
}

inline std::optional<PrWitness> pr_violation(const FaigleGeometry& g) {
  if (!g.contains_flat(ElemSet{})) return PrWitness{std::nullopt, false};
  for (Elem u = 0; u < g.size(); ++u) {
    if (!g.contains_flat(g.ground().down_set(u))) return PrWitness{u, false};
    if (!g.contains_flat(g.ground().strict_down_set(u)))
      return PrWitness{u, true};
  }
  return std::nullopt;
}

inline std::optional<CpWitness> cp_violation(const FaigleGeometry& g) {
  const auto& flats = g.flats();
  const auto& covers = g.upper_covers();
  for (Elem u = 0; u < g.size(); ++u) {
    const ElemSet below = g.ground().strict_down_set(u);
    for (std::size_t i = 0; i < flats.size(); ++i) {
      const ElemSet& x = flats[i];
      if (x.contains(u) || !below.subset_of(x)) continue;
      bool found = false;
      for (std::size_t j : covers[i]) found = found || flats[j].contains(u);
      if (!found) return CpWitness{u, x};
    }
  }
  return std::nullopt;
}

/// FEP scan. `require_u_not_in_s` keeps the stipulation u ∉ S, which is
/// redundant; passing false checks the weaker-looking variant.
inline std::optional<FepWitness> fep_violation(const FaigleGeometry& g,
                                               bool require_u_not_in_s = true) {
  for (Elem u = 0; u < g.size(); ++u) {
    const ElemSet below = g.ground().strict_down_set(u);
    for (const ElemSet& s : g.flats()) {
      if (require_u_not_in_s && s.contains(u)) continue;
      if (!below.subset_of(s)) continue;
      ElemSet with_u = s;
      with_u.insert(u);
      const ElemSet cl_u = g.closure_unchecked(with_u);
      for (Elem v = 0; v < g.size(); ++v) {
        if (s.contains(v) || !cl_u.contains(v)) continue;
        ElemSet with_v = s;
        with_v.insert(v);
        if (!g.closure_unchecked(with_v).contains(u))
          return FepWitness{u, v, s};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Evaluates F∩, F↓, Pr, CP and FEP exhaustively. Never throws on invalid
/// families; failures are reported with witnesses.
inline AxiomReport check_axioms(const FaigleGeometry& g) {
  AxiomReport r;
  r.cap_witness = detail::cap_violation(g);
  r.down_witness = detail::down_violation(g);
  r.pr_witness = detail::pr_violation(g);
  r.cp_witness = detail::cp_violation(g);
  r.fep_witness = detail::fep_violation(g);
  r.holds_cap = !r.cap_witness;
  r.holds_down = !r.down_witness;
  r.holds_pr = !r.pr_witness;
  r.holds_cp = !r.cp_witness;
  r.holds_fep = !r.fep_witness;
  return r;
}

inline bool FaigleGeometry::verify() {
  verified_ = check_axioms(*this).all();
  return verified_;
}

namespace detail {

inline void require_verified(const FaigleGeometry& g) {
  if (!g.verified())
    throw NotVerifiedGeometry("geometry has not passed the axiom check");
}

inline void require_flat(const FaigleGeometry& g, const ElemSet& x) {
  if (!g.contains_flat(x))
    throw PreconditionFailed(x.to_string() + " is not a flat");
}

}  // namespace detail

/// The unique flat Y with X ≺ Y and u ∈ Y, for u ∉ X and ⇓u ⊆ X.
inline ElemSet cp_unique_cover(const FaigleGeometry& g, Elem u,
                               const ElemSet& x) {
  detail::require_verified(g);
  Poset::check_index(u, g.size());
  detail::require_flat(g, x);
  detail::require(!x.contains(u), "u belongs to X");
  detail::require(g.ground().strict_down_set(u).subset_of(x),
                  "strict down-set of u is not contained in X");
  std::optional<ElemSet> found;
  std::size_t count = 0;
  for (std::size_t j : g.upper_covers()[*g.index_of(x)]) {
    if (g.flats()[j].contains(u)) {
      found = g.flats()[j];
      ++count;
    }
  }
  detail::ensure(count == 1, "expected exactly one covering flat containing " +
                                 std::to_string(u) + " above " + x.to_string() +
                                 ", found " + std::to_string(count));
  return *found;
}

/// Geom L = (Jir L, {Jir L ∩ ↓x : x ∈ L}). Ground index i is the i-th
/// join-irreducible in increasing lattice order (see jir_poset).
inline FaigleGeometry geom_of_lattice(const Lattice& l) {
  if (!is_semimodular(l)) throw NotSemimodular("lattice is not semimodular");
  JirPoset jp = jir_poset(l);
  std::vector<ElemSet> flats;
  flats.reserve(l.size());
  const ElemSet jir = join_irreducibles(l);
  for (Elem x = 0; x < l.size(); ++x)
    flats.push_back(jp.to_ground(jir & l.order().down_set(x)));
  FaigleGeometry g(std::move(jp.poset), std::move(flats));
  detail::ensure(g.flats().size() == l.size(),
                 "distinct lattice elements produced equal flats");
  detail::ensure(g.verify(), "geometry of a semimodular lattice fails an axiom");
  return g;
}

/// Checks cl(X) = Jir L ∩ ↓(⋁X) for a set X of join-irreducible lattice
/// elements, given L's geometry.
inline bool closure_description_check(const Lattice& l, const FaigleGeometry& g,
                                      const JirPoset& jp, const ElemSet& x) {
  detail::require(x.subset_of(join_irreducibles(l)),
                  "X is not a set of join-irreducible elements");
  const ElemSet cl = closure(g, jp.to_ground(x));
  const ElemSet described =
      jp.to_ground(join_irreducibles(l) & l.order().down_set(l.join_all(x)));
  return cl == described;
}

inline bool closure_description_check(const Lattice& l, const ElemSet& x) {
  FaigleGeometry g = geom_of_lattice(l);
  return closure_description_check(l, g, jir_poset(l), x);
}

/// (F, ⊆) as a lattice. Element i of `lattice` is `flats[i]`, which is the
/// geometry's canonical flat order.
struct FlatLattice {
  Lattice lattice;
  std::vector<ElemSet> flats;

  Elem element_of(const ElemSet& flat) const {
    auto it = std::lower_bound(flats.begin(), flats.end(), flat);
    if (it == flats.end() || *it != flat)
      throw PreconditionFailed(flat.to_string() + " is not a flat");
    return static_cast<Elem>(it - flats.begin());
  }
};

inline FlatLattice lattice_of_flats(const FaigleGeometry& g) {
  detail::require_verified(g);
  const auto& flats = g.flats();
  Poset order = Poset::from_relation(flats.size(), [&](Elem i, Elem j) {
    return flats[i].subset_of(flats[j]);
  });
  FlatLattice fl{Lattice::from_poset(std::move(order)), flats};
  const Lattice& l = fl.lattice;
  for (Elem i = 0; i < flats.size(); ++i) {
    for (Elem j = i + 1; j < flats.size(); ++j) {
      detail::ensure(flats[l.meet(i, j)] == (flats[i] & flats[j]),
                     "meet of flats is not their intersection");
      detail::ensure(
          flats[l.join(i, j)] == g.closure_unchecked(flats[i] | flats[j]),
          "join of flats is not the closure of their union");
    }
  }
  detail::ensure(is_semimodular(l), "lattice of flats is not semimodular");
  return fl;
}

/// Evaluates "∃u ∈ Y∖X with ⇓u ⊆ X and Y = cl(X ∪ {u})" and checks it
/// agrees with X ≺ Y in the lattice of flats. Returns the cover bit.
inline bool flat_cover_characterization(const FaigleGeometry& g,
                                        const FlatLattice& fl, const ElemSet& x,
                                        const ElemSet& y) {
  detail::require_verified(g);
  detail::require_flat(g, x);
  detail::require_flat(g, y);
  bool witnessed = false;
  (y - x).for_each([&](Elem u) {
    if (witnessed || !g.ground().strict_down_set(u).subset_of(x)) return;
    ElemSet with_u = x;
    with_u.insert(u);
    witnessed = g.closure_unchecked(with_u) == y;
  });
  const bool cover = fl.lattice.is_cover(fl.element_of(x), fl.element_of(y));
  detail::ensure(cover == witnessed,
                 "cover characterization disagrees for " + x.to_string() +
                     " and " + y.to_string());
  return cover;
}

inline bool flat_cover_characterization(const FaigleGeometry& g,
                                        const ElemSet& x, const ElemSet& y) {
  return flat_cover_characterization(g, lattice_of_flats(g), x, y);
}

/// Lat(Geom L) ≅ L via x ↦ Jir L ∩ ↓x, with inverse Y ↦ ⋁Y.
inline bool roundtrip_lattice(const Lattice& l) {
  FaigleGeometry g = geom_of_lattice(l);
  FlatLattice fl = lattice_of_flats(g);
  JirPoset jp = jir_poset(l);
  const ElemSet jir = join_irreducibles(l);
  detail::ensure(fl.lattice.size() == l.size(),
                 "lattice of flats has a different size");
  std::vector<Elem> lambda(l.size());
  for (Elem x = 0; x < l.size(); ++x)
    lambda[x] = fl.element_of(jp.to_ground(jir & l.order().down_set(x)));
  for (Elem x = 0; x < l.size(); ++x) {
    detail::ensure(l.join_all(jp.to_lattice(fl.flats[lambda[x]])) == x,
                   "join of the flat of x is not x");
    for (Elem y = 0; y < l.size(); ++y)
      detail::ensure(l.leq(x, y) == fl.lattice.leq(lambda[x], lambda[y]),
                     "x -> Jir ∩ ↓x is not an order isomorphism");
  }
  for (Elem f = 0; f < fl.lattice.size(); ++f) {
    Elem x = l.join_all(jp.to_lattice(fl.flats[f]));
    detail::ensure(lambda[x] == f, "Y -> ⋁Y is not inverse to x -> Jir ∩ ↓x");
  }
  detail::ensure(Embedding(l, fl.lattice, lambda).map().size() == l.size(),
                 "lambda is not an embedding");
  return true;
}

/// Geom(Lat G) ≅ G via u ↦ ↓u.
inline bool roundtrip_geometry(const FaigleGeometry& g) {
  detail::require_verified(g);
  FlatLattice fl = lattice_of_flats(g);
  FaigleGeometry g2 = geom_of_lattice(fl.lattice);
  JirPoset jp = jir_poset(fl.lattice);
  detail::ensure(jp.elements.size() == g.size(),
                 "Jir of the lattice of flats has a different size");
  // phi(u) = ↓u, as a ground index of g2.
  std::vector<Elem> phi(g.size());
  for (Elem u = 0; u < g.size(); ++u)
    phi[u] = jp.index_of(fl.element_of(g.ground().down_set(u)));
  std::vector<char> hit(g.size(), 0);
  for (Elem u = 0; u < g.size(); ++u) {
    detail::ensure(!hit[phi[u]], "u -> ↓u is not injective");
    hit[phi[u]] = 1;
    for (Elem v = 0; v < g.size(); ++v)
      detail::ensure(
          g.ground().leq(u, v) == g2.ground().leq(phi[u], phi[v]),
          "u -> ↓u is not a poset isomorphism");
  }
  std::vector<ElemSet> mapped;
  for (const auto& x : g.flats()) {
    ElemSet y;
    x.for_each([&](Elem u) { y.insert(phi[u]); });
    mapped.push_back(y);
  }
  std::sort(mapped.begin(), mapped.end());
  detail::ensure(mapped == g2.flats(), "image of F differs from F'");
  return true;
}

/// A ground bijection φ with φ(F1) = F2, if the geometries are isomorphic.
inline std::optional<std::vector<Elem>> geometry_isomorphic(
    const FaigleGeometry& a, const FaigleGeometry& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.flats().size() != b.flats().size()) return std::nullopt;
  auto profile = [](const FaigleGeometry& g, Elem u) {
    std::size_t in_flats = 0;
    for (const auto& f : g.flats()) in_flats += f.contains(u) ? 1 : 0;
    return std::tuple(g.ground().down_set(u).size(),
                      g.ground().up_set(u).size(), in_flats);
  };
  std::vector<Elem> map(n, kMaxElements);
  std::vector<char> used(n, 0);
  std::function<bool(Elem)> place = [&](Elem u) -> bool {
    if (u == n) {
      std::vector<ElemSet> mapped;
      for (const auto& x : a.flats()) {
        ElemSet y;
        x.for_each([&](Elem e) { y.insert(map[e]); });
        if (!b.contains_flat(y)) return false;
        mapped.push_back(y);
      }
      return true;
    }
    for (Elem v = 0; v < n; ++v) {
      if (used[v] || profile(a, u) != profile(b, v)) continue;
      bool ok = true;
      for (Elem w = 0; w < u && ok; ++w)
        ok = a.ground().leq(w, u) == b.ground().leq(map[w], v) &&
             a.ground().leq(u, w) == b.ground().leq(v, map[w]);
      if (!ok) continue;
      map[u] = v;
      used[v] = 1;
      if (place(u + 1)) return true;
      used[v] = 0;
    }
    map[u] = kMaxElements;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map;
}

}  // namespace faigle
