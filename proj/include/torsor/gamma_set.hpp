#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "torsor/gamma_group.hpp"

namespace torsor {

/// A finite set with a left action of Γ; row γ of the table gives γ·x.
class GammaSet {
 public:
  GammaSet() = default;

  static GammaSet from_table(FiniteGroup gamma, std::size_t size, std::vector<element_t> table) {
    check_action(gamma, size, table, "gamma");
    return GammaSet(std::move(gamma), size, std::move(table));
  }

  static GammaSet trivial(FiniteGroup gamma, std::size_t size) {
    std::vector<element_t> t;
    t.reserve(gamma.order() * size);
    for (std::size_t s = 0; s < gamma.order(); ++s)
      for (std::size_t x = 0; x < size; ++x) t.push_back(static_cast<element_t>(x));
    return GammaSet(std::move(gamma), size, std::move(t));
  }

  const FiniteGroup& gamma() const noexcept { return gamma_; }
  std::size_t size() const noexcept { return size_; }
  element_t act(element_t s, element_t x) const noexcept { return table_[s * size_ + x]; }
  const std::vector<element_t>& table() const noexcept { return table_; }
  Permutation row(element_t s) const {
    return Permutation(table_.begin() + s * size_, table_.begin() + (s + 1) * size_);
  }

  friend bool operator==(const GammaSet& a, const GammaSet& b) {
    return a.size_ == b.size_ && a.table_ == b.table_ && a.gamma_ == b.gamma_;
  }

  /// Throws invariant_error unless `table` is a left action of `group` on `size` points.
  static void check_action(const FiniteGroup& group, std::size_t size, const std::vector<element_t>& table,
                           const char* what) {
    if (table.size() != group.order() * size)
      throw invariant_error(std::string(what) + " action table has wrong size");
    for (std::size_t s = 0; s < group.order(); ++s) {
      std::vector<element_t> row(table.begin() + s * size, table.begin() + (s + 1) * size);
      if (!perm::is_permutation(row))
        throw invariant_error(std::string(what) + " action row " + std::to_string(s) + " is not a permutation");
    }
    for (std::size_t x = 0; x < size; ++x)
      if (table[x] != x) throw invariant_error(std::string(what) + " identity moves point " + std::to_string(x));
    for (element_t s = 0; s < group.order(); ++s)
      for (element_t t = 0; t < group.order(); ++t)
        for (std::size_t x = 0; x < size; ++x)
          if (table[group.mul(s, t) * size + x] != table[s * size + table[t * size + x]])
            throw invariant_error(std::string(what) + " action not compatible with the law at (" +
                                  std::to_string(s) + ", " + std::to_string(t) + ", point " + std::to_string(x) +
                                  ")");
  }

 private:
  GammaSet(FiniteGroup gamma, std::size_t size, std::vector<element_t> table)
      : gamma_(std::move(gamma)), size_(size), table_(std::move(table)) {}

  FiniteGroup gamma_;
  std::size_t size_{};
  std::vector<element_t> table_;
};

/// Γ-orbits, each sorted, ordered by their minimum.
inline std::vector<std::vector<element_t>> orbits_of(std::size_t size, const std::vector<Permutation>& gens) {
  std::vector<bool> seen(size, false);
  std::vector<std::vector<element_t>> out;
  for (element_t x = 0; x < size; ++x) {
    if (seen[x]) continue;
    std::vector<element_t> orbit{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : gens) {
        auto y = g[orbit[i]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

inline std::vector<Permutation> generator_rows(const GammaSet& s) {
  std::vector<Permutation> rows;
  for (auto g : s.gamma().generators()) rows.push_back(s.row(g));
  return rows;
}

inline std::vector<std::vector<element_t>> orbits(const GammaSet& s) { return orbits_of(s.size(), generator_rows(s)); }

inline std::vector<element_t> fixed_points(const GammaSet& s) {
  std::vector<element_t> out;
  const auto rows = generator_rows(s);
  for (element_t x = 0; x < s.size(); ++x)
    if (std::all_of(rows.begin(), rows.end(), [&](const Permutation& r) { return r[x] == x; })) out.push_back(x);
  return out;
}

/// Same points, action of `sub` only (sub.as_group() numbering).
inline GammaSet restrict(const GammaSet& s, const Subgroup& sub) {
  std::vector<element_t> t;
  for (auto g : sub.members())
    for (element_t x = 0; x < s.size(); ++x) t.push_back(s.act(g, x));
  return GammaSet::from_table(sub.as_group(), s.size(), std::move(t));
}

/// Transitivity of the action of `geometric` (a normal subgroup of Γ).
inline bool is_geometrically_connected(const GammaSet& s, const Subgroup& geometric) {
  std::vector<Permutation> rows;
  for (auto g : geometric.members()) rows.push_back(s.row(g));
  return orbits_of(s.size(), rows).size() <= 1;
}

/// A Γ-set with a Γ-equivariant left G-action: γ·(g·x) = (γ⋆g)·(γ·x).
class GObject {
 public:
  GObject() = default;

  static GObject make(GammaSet base, GammaGroup gg, std::vector<element_t> gaction) {
    if (!(base.gamma() == gg.gamma())) throw invariant_error("gamma-set and gamma-group use different gamma");
    const auto n = base.size();
    GammaSet::check_action(gg.group(), n, gaction, "group");
    for (element_t s = 0; s < gg.gamma().order(); ++s)
      for (element_t g = 0; g < gg.group().order(); ++g)
        for (element_t x = 0; x < n; ++x)
          if (base.act(s, gaction[g * n + x]) != gaction[gg.act(s, g) * n + base.act(s, x)])
            throw invariant_error("not gamma-equivariant at (gamma " + std::to_string(s) + ", g " +
                                  std::to_string(g) + ", point " + std::to_string(x) + ")");
    return GObject(std::move(base), std::move(gg), std::move(gaction));
  }

  const GammaSet& base() const noexcept { return base_; }
  const GammaGroup& gamma_group() const noexcept { return gg_; }
  std::size_t size() const noexcept { return base_.size(); }
  element_t gamma_act(element_t s, element_t x) const noexcept { return base_.act(s, x); }
  element_t g_act(element_t g, element_t x) const noexcept { return gaction_[g * size() + x]; }
  const std::vector<element_t>& gaction() const noexcept { return gaction_; }
  Permutation g_row(element_t g) const {
    return Permutation(gaction_.begin() + g * size(), gaction_.begin() + (g + 1) * size());
  }

  friend bool operator==(const GObject& a, const GObject& b) {
    return a.base_ == b.base_ && a.gg_ == b.gg_ && a.gaction_ == b.gaction_;
  }

 private:
  friend GObject trusted_gobject(GammaSet, GammaGroup, std::vector<element_t>);
  GObject(GammaSet base, GammaGroup gg, std::vector<element_t> gaction)
      : base_(std::move(base)), gg_(std::move(gg)), gaction_(std::move(gaction)) {}

  GammaSet base_;
  GammaGroup gg_;
  std::vector<element_t> gaction_;
};

// For constructions that satisfy the axioms by construction.
inline GObject trusted_gobject(GammaSet base, GammaGroup gg, std::vector<element_t> gaction) {
  return GObject(std::move(base), std::move(gg), std::move(gaction));
}

/// Permutation of the points induced by g (the map φ: G → Aut(ξ)).
inline Permutation g_permutation(const GObject& o, element_t g) { return o.g_row(g); }

namespace detail {

// Bijections f: A → B with f∘a_i = b_i∘f for every i, where a_i / b_i are the
// i-th structure permutations of A and B. Points of A are split into orbits of
// the a_i; the image of an orbit root fixes the whole orbit.
class BijectionSearch {
 public:
  BijectionSearch(std::size_t size, std::vector<Permutation> a, std::vector<Permutation> b)
      : n_(size), a_(std::move(a)), b_(std::move(b)) {
    std::vector<bool> seen(n_, false);
    for (element_t x = 0; x < n_; ++x) {
      if (seen[x]) continue;
      std::vector<element_t> order{x};
      seen[x] = true;
      for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& p : a_) {
          auto y = p[order[i]];
          if (!seen[y]) {
            seen[y] = true;
            order.push_back(y);
          }
        }
      components_.push_back(std::move(order));
    }
  }

  std::vector<Permutation> all() {
    results_.clear();
    first_only_ = false;
    run();
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

  std::optional<Permutation> first() {
    results_.clear();
    first_only_ = true;
    run();
    if (results_.empty()) return std::nullopt;
    return results_.front();
  }

 private:
  static constexpr auto unset = static_cast<element_t>(-1);

  void run() {
    f_.assign(n_, unset);
    used_.assign(n_, false);
    recurse(0);
  }

  bool recurse(std::size_t comp) {
    if (comp == components_.size()) {
      results_.push_back(f_);
      return first_only_;
    }
    const auto& order = components_[comp];
    for (element_t y = 0; y < n_; ++y) {
      if (used_[y]) continue;
      std::vector<element_t> assigned;
      if (propagate(order, y, assigned) && recurse(comp + 1)) return true;
      for (auto x : assigned) {
        used_[f_[x]] = false;
        f_[x] = unset;
      }
    }
    return false;
  }

  bool propagate(const std::vector<element_t>& order, element_t y, std::vector<element_t>& assigned) {
    auto assign = [&](element_t x, element_t v) {
      if (f_[x] != unset) return f_[x] == v;
      if (used_[v]) return false;
      f_[x] = v;
      used_[v] = true;
      assigned.push_back(x);
      return true;
    };
    if (!assign(order.front(), y)) return false;
    // order lists the component in discovery order, so every point's image is
    // set before it is expanded
    for (auto x : order)
      for (std::size_t i = 0; i < a_.size(); ++i)
        if (!assign(a_[i][x], b_[i][f_[x]])) return false;
    return true;
  }

  std::size_t n_;
  std::vector<Permutation> a_, b_;
  std::vector<std::vector<element_t>> components_;
  std::vector<element_t> f_;
  std::vector<bool> used_;
  std::vector<Permutation> results_;
  bool first_only_ = false;
};

inline std::vector<Permutation> structure_perms(const GObject& o, bool with_gamma = true) {
  std::vector<Permutation> out;
  if (with_gamma)
    for (auto s : o.gamma_group().gamma().generators()) out.push_back(o.base().row(s));
  for (auto g : o.gamma_group().group().generators()) out.push_back(o.g_row(g));
  return out;
}

}  // namespace detail

/// Bijections commuting with the Γ- and G-actions, sorted lexicographically.
inline std::vector<Permutation> equivariant_isoms(const GObject& a, const GObject& b) {
  if (!(a.gamma_group() == b.gamma_group())) throw precondition_error("objects over different gamma-groups");
  if (a.size() != b.size()) return {};
  return detail::BijectionSearch(a.size(), detail::structure_perms(a), detail::structure_perms(b)).all();
}

inline std::optional<Permutation> find_equivariant_isom(const GObject& a, const GObject& b) {
  if (!(a.gamma_group() == b.gamma_group())) throw precondition_error("objects over different gamma-groups");
  if (a.size() != b.size()) return std::nullopt;
  return detail::BijectionSearch(a.size(), detail::structure_perms(a), detail::structure_perms(b)).first();
}

/// G-equivariant bijections ignoring Γ (the points of the Isom sheaf over the
/// separable closure).
inline std::vector<Permutation> g_isoms(const GObject& a, const GObject& b) {
  if (!(a.gamma_group().group() == b.gamma_group().group())) throw precondition_error("objects over different groups");
  if (a.size() != b.size()) return {};
  return detail::BijectionSearch(a.size(), detail::structure_perms(a, false), detail::structure_perms(b, false)).all();
}

/// True when f commutes with both actions.
inline bool is_equivariant(const GObject& a, const GObject& b, const Permutation& f) {
  if (f.size() != a.size() || a.size() != b.size()) return false;
  for (element_t x = 0; x < a.size(); ++x) {
    for (element_t s = 0; s < a.gamma_group().gamma().order(); ++s)
      if (f[a.gamma_act(s, x)] != b.gamma_act(s, f[x])) return false;
    for (element_t g = 0; g < a.gamma_group().group().order(); ++g)
      if (f[a.g_act(g, x)] != b.g_act(g, f[x])) return false;
  }
  return perm::is_permutation(f);
}

// ---- standard objects ----

/// One point, everything acts trivially.
inline GObject point_object(const GammaGroup& gg, std::size_t copies = 1) {
  return trusted_gobject(GammaSet::trivial(gg.gamma(), copies), gg,
                         GammaSet::trivial(gg.group(), copies).table());
}

/// G acting on itself by left translation; Γ acts through ⋆.
inline GObject regular_object(const GammaGroup& gg) {
  const auto& G = gg.group();
  const auto n = G.order();
  std::vector<element_t> gam, ga;
  for (element_t s = 0; s < gg.gamma().order(); ++s)
    for (element_t x = 0; x < n; ++x) gam.push_back(gg.act(s, x));
  for (element_t g = 0; g < n; ++g)
    for (element_t x = 0; x < n; ++x) ga.push_back(G.mul(g, x));
  return trusted_gobject(GammaSet::from_table(gg.gamma(), n, std::move(gam)), gg, std::move(ga));
}

/// G acting on itself by conjugation; Γ acts through ⋆.
inline GObject conjugation_object(const GammaGroup& gg) {
  const auto& G = gg.group();
  const auto n = G.order();
  std::vector<element_t> gam, ga;
  for (element_t s = 0; s < gg.gamma().order(); ++s)
    for (element_t x = 0; x < n; ++x) gam.push_back(gg.act(s, x));
  for (element_t g = 0; g < n; ++g)
    for (element_t x = 0; x < n; ++x) ga.push_back(G.conj(g, x));
  return trusted_gobject(GammaSet::from_table(gg.gamma(), n, std::move(gam)), gg, std::move(ga));
}

/// Left cosets G/K, numbered by smallest member; K must be Γ-stable.
inline GObject coset_object(const GammaGroup& gg, const Subgroup& k) {
  const auto& G = gg.group();
  std::vector<element_t> coset(G.order(), static_cast<element_t>(-1));
  std::vector<element_t> reps;
  for (element_t x = 0; x < G.order(); ++x) {
    if (coset[x] != static_cast<element_t>(-1)) continue;
    for (auto m : k.members()) coset[G.mul(x, m)] = static_cast<element_t>(reps.size());
    reps.push_back(x);
  }
  const auto n = reps.size();
  std::vector<element_t> gam, ga;
  for (element_t s = 0; s < gg.gamma().order(); ++s)
    for (auto r : reps) gam.push_back(coset[gg.act(s, r)]);
  for (element_t g = 0; g < G.order(); ++g)
    for (auto r : reps) ga.push_back(coset[G.mul(g, r)]);
  return GObject::make(GammaSet::from_table(gg.gamma(), n, std::move(gam)), gg, std::move(ga));
}

/// Disjoint union; points of b follow those of a.
inline GObject disjoint_union(const GObject& a, const GObject& b) {
  if (!(a.gamma_group() == b.gamma_group())) throw precondition_error("objects over different gamma-groups");
  const auto& gg = a.gamma_group();
  const auto na = a.size(), nb = b.size(), n = na + nb;
  std::vector<element_t> gam, ga;
  for (element_t s = 0; s < gg.gamma().order(); ++s) {
    for (element_t x = 0; x < na; ++x) gam.push_back(a.gamma_act(s, x));
    for (element_t x = 0; x < nb; ++x) gam.push_back(static_cast<element_t>(na + b.gamma_act(s, x)));
  }
  for (element_t g = 0; g < gg.group().order(); ++g) {
    for (element_t x = 0; x < na; ++x) ga.push_back(a.g_act(g, x));
    for (element_t x = 0; x < nb; ++x) ga.push_back(static_cast<element_t>(na + b.g_act(g, x)));
  }
  return trusted_gobject(GammaSet::from_table(gg.gamma(), n, std::move(gam)), gg, std::move(ga));
}

/// Product with diagonal actions; point (x, y) is x * |b| + y.
inline GObject product(const GObject& a, const GObject& b) {
  if (!(a.gamma_group() == b.gamma_group())) throw precondition_error("objects over different gamma-groups");
  const auto& gg = a.gamma_group();
  const auto na = a.size(), nb = b.size();
  std::vector<element_t> gam, ga;
  for (element_t s = 0; s < gg.gamma().order(); ++s)
    for (element_t x = 0; x < na; ++x)
      for (element_t y = 0; y < nb; ++y) gam.push_back(static_cast<element_t>(a.gamma_act(s, x) * nb + b.gamma_act(s, y)));
  for (element_t g = 0; g < gg.group().order(); ++g)
    for (element_t x = 0; x < na; ++x)
      for (element_t y = 0; y < nb; ++y) ga.push_back(static_cast<element_t>(a.g_act(g, x) * nb + b.g_act(g, y)));
  return trusted_gobject(GammaSet::from_table(gg.gamma(), na * nb, std::move(gam)), gg, std::move(ga));
}

/// Same Γ-set with the G-action pulled back along f: H → G (f Γ-equivariant).
inline GObject pull_back(const GObject& o, const GroupHom& f, const GammaGroup& source) {
  if (auto w = equivariance_failure(f, source, o.gamma_group()))
    throw precondition_error("homomorphism is not gamma-equivariant");
  std::vector<element_t> ga;
  for (element_t h = 0; h < source.group().order(); ++h)
    for (element_t x = 0; x < o.size(); ++x) ga.push_back(o.g_act(f(h), x));
  return trusted_gobject(o.base(), source, std::move(ga));
}

/// Restriction of Γ to a subgroup on both the set and the group.
inline GObject restrict(const GObject& o, const Subgroup& sub) {
  return trusted_gobject(restrict(o.base(), sub), o.gamma_group().restrict(sub), o.gaction());
}

/// Orbit space by a normal Γ-stable K ◁ G, as an object over G/K.
/// Orbits are numbered by their smallest point.
inline GObject orbit_space(const GObject& o, const Subgroup& k, const GammaQuotient& q) {
  std::vector<Permutation> kperms;
  for (auto m : k.members()) kperms.push_back(o.g_row(m));
  const auto orbs = orbits_of(o.size(), kperms);
  std::vector<element_t> cls(o.size());
  for (element_t i = 0; i < orbs.size(); ++i)
    for (auto x : orbs[i]) cls[x] = i;
  const auto n = orbs.size();
  const auto& Q = q.group.group();
  std::vector<element_t> rep(Q.order(), 0);
  for (element_t x = q.projection.source().order(); x-- > 0;) rep[q.projection(x)] = x;
  std::vector<element_t> gam, ga;
  for (element_t s = 0; s < o.gamma_group().gamma().order(); ++s)
    for (const auto& orb : orbs) gam.push_back(cls[o.gamma_act(s, orb.front())]);
  for (element_t y = 0; y < Q.order(); ++y)
    for (const auto& orb : orbs) ga.push_back(cls[o.g_act(rep[y], orb.front())]);
  return GObject::make(GammaSet::from_table(o.gamma_group().gamma(), n, std::move(gam)), q.group, std::move(ga));
}

}  // namespace torsor
