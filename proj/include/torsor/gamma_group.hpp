#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsor/finite_group.hpp"

namespace torsor {

/// A finite group G with an action of Γ by automorphisms, written γ⋆g.
class GammaGroup {
 public:
  GammaGroup() = default;

  /// `act[γ]` is the permutation of G's elements induced by γ.
  /// Throws invariant_error if the tables do not define a homomorphism Γ → Aut(G).
  static GammaGroup from_action(FiniteGroup gamma, FiniteGroup g, std::vector<Permutation> act) {
    if (act.size() != gamma.order()) throw invariant_error("action has " + std::to_string(act.size()) +
                                                           " rows, expected " + std::to_string(gamma.order()));
    for (std::size_t s = 0; s < act.size(); ++s) {
      const auto& a = act[s];
      if (a.size() != g.order() || !perm::is_permutation(a))
        throw invariant_error("action row " + std::to_string(s) + " is not a permutation of G");
      for (element_t x = 0; x < g.order(); ++x)
        for (element_t y = 0; y < g.order(); ++y)
          if (a[g.mul(x, y)] != g.mul(a[x], a[y]))
            throw invariant_error("action row " + std::to_string(s) + " is not an automorphism at (" +
                                  std::to_string(x) + ", " + std::to_string(y) + ")");
    }
    if (act[0] != perm::identity(g.order())) throw invariant_error("identity of gamma acts nontrivially");
    for (element_t s = 0; s < gamma.order(); ++s)
      for (element_t t = 0; t < gamma.order(); ++t)
        if (act[gamma.mul(s, t)] != perm::compose(act[s], act[t]))
          throw invariant_error("action is not a homomorphism at (" + std::to_string(s) + ", " +
                                std::to_string(t) + ")");
    return GammaGroup(std::move(gamma), std::move(g), std::move(act));
  }

  static GammaGroup trivial(FiniteGroup gamma, FiniteGroup g) {
    std::vector<Permutation> act(gamma.order(), perm::identity(g.order()));
    return GammaGroup(std::move(gamma), std::move(g), std::move(act));
  }

  /// Action through a homomorphism Γ → Aut(G), the latter given as the
  /// automorphism_group(G) of finite_group.hpp.
  static GammaGroup from_hom_to_aut(const GroupHom& rho, const FiniteGroup& g) {
    const auto autos = automorphisms(g);
    if (autos.size() != rho.target().order()) throw precondition_error("target is not Aut(G)");
    std::vector<Permutation> act;
    for (element_t s = 0; s < rho.source().order(); ++s) act.push_back(autos[rho(s)]);
    return from_action(rho.source(), g, std::move(act));
  }

  const FiniteGroup& gamma() const noexcept { return gamma_; }
  const FiniteGroup& group() const noexcept { return g_; }
  element_t act(element_t s, element_t x) const noexcept { return act_[s][x]; }
  const std::vector<Permutation>& action() const noexcept { return act_; }

  bool action_is_trivial() const {
    const auto id = perm::identity(g_.order());
    return std::all_of(act_.begin(), act_.end(), [&](const Permutation& p) { return p == id; });
  }

  /// Same G with Γ replaced by the subgroup `sub` (as sub.as_group()).
  GammaGroup restrict(const Subgroup& sub) const {
    std::vector<Permutation> act;
    for (auto s : sub.members()) act.push_back(act_[s]);
    return GammaGroup(sub.as_group(), g_, std::move(act));
  }

  /// G with the law reversed; Γ acts by the same permutations.
  GammaGroup opposite() const { return GammaGroup(gamma_, g_.opposite(), act_); }

  friend bool operator==(const GammaGroup& a, const GammaGroup& b) {
    return a.gamma_ == b.gamma_ && a.g_ == b.g_ && a.act_ == b.act_;
  }

 private:
  GammaGroup(FiniteGroup gamma, FiniteGroup g, std::vector<Permutation> act)
      : gamma_(std::move(gamma)), g_(std::move(g)), act_(std::move(act)) {}

  FiniteGroup gamma_;
  FiniteGroup g_;
  std::vector<Permutation> act_;
};

/// c: Γ → G with c(γδ) = c(γ)·(γ⋆c(δ)). Classifies right G-torsors.
class Cocycle {
 public:
  Cocycle() = default;

  const GammaGroup& gamma_group() const noexcept { return gg_; }
  const std::vector<element_t>& values() const noexcept { return c_; }
  element_t operator()(element_t s) const noexcept { return c_[s]; }

  friend bool operator==(const Cocycle& a, const Cocycle& b) { return a.c_ == b.c_ && a.gg_ == b.gg_; }

 private:
  friend Cocycle validate_cocycle(const GammaGroup&, std::vector<element_t>);
  friend Cocycle trusted_cocycle(const GammaGroup&, std::vector<element_t>);
  Cocycle(GammaGroup gg, std::vector<element_t> c) : gg_(std::move(gg)), c_(std::move(c)) {}

  GammaGroup gg_;
  std::vector<element_t> c_;
};

/// First (γ, δ) at which the cocycle identity fails, if any.
inline std::optional<std::pair<element_t, element_t>> cocycle_failure(const GammaGroup& gg,
                                                                       const std::vector<element_t>& c) {
  const auto& gam = gg.gamma();
  const auto& g = gg.group();
  for (element_t s = 0; s < gam.order(); ++s)
    for (element_t t = 0; t < gam.order(); ++t)
      if (c[gam.mul(s, t)] != g.mul(c[s], gg.act(s, c[t]))) return std::pair{s, t};
  return std::nullopt;
}

inline Cocycle validate_cocycle(const GammaGroup& gg, std::vector<element_t> c) {
  if (c.size() != gg.gamma().order())
    throw invariant_error("cocycle has " + std::to_string(c.size()) + " values, expected " +
                          std::to_string(gg.gamma().order()));
  for (auto x : c)
    if (x >= gg.group().order()) throw invariant_error("cocycle value out of range");
  if (auto w = cocycle_failure(gg, c))
    throw invariant_error("cocycle condition fails at (" + gg.gamma().label(w->first) + ", " +
                          gg.gamma().label(w->second) + ")");
  return Cocycle(gg, std::move(c));
}

// Skips the O(|Γ|²) check; for values produced by constructions that are
// cocycles by construction and are re-validated in tests.
inline Cocycle trusted_cocycle(const GammaGroup& gg, std::vector<element_t> c) { return Cocycle(gg, std::move(c)); }

inline Cocycle trivial_cocycle(const GammaGroup& gg) {
  return trusted_cocycle(gg, std::vector<element_t>(gg.gamma().order(), 0));
}

/// Trivial Γ-action: a homomorphism Γ → G is a cocycle.
inline Cocycle cocycle_from_hom(const GammaGroup& gg, const GroupHom& h) {
  return validate_cocycle(gg, h.map());
}

/// g⁻¹·c(γ)·(γ⋆g)
inline Cocycle twisted_conjugate(const Cocycle& c, element_t g) {
  const auto& gg = c.gamma_group();
  const auto& G = gg.group();
  std::vector<element_t> out(c.values().size());
  for (element_t s = 0; s < out.size(); ++s) out[s] = G.mul(G.mul(G.inv(g), c(s)), gg.act(s, g));
  return trusted_cocycle(gg, std::move(out));
}

/// Some g with c2(γ) = g⁻¹·c1(γ)·(γ⋆g) for all γ (the smallest such g).
inline std::optional<element_t> twisted_conjugate_equiv(const Cocycle& c1, const Cocycle& c2) {
  if (!(c1.gamma_group() == c2.gamma_group())) throw precondition_error("cocycles over different gamma-groups");
  const auto& gg = c1.gamma_group();
  const auto& G = gg.group();
  for (element_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (element_t s = 0; s < gg.gamma().order() && ok; ++s)
      ok = c2(s) == G.mul(G.mul(G.inv(g), c1(s)), gg.act(s, g));
    if (ok) return g;
  }
  return std::nullopt;
}

/// Every cocycle, in lexicographic order of the value table. A cocycle is
/// determined by its values on generators of Γ, so only those are searched.
inline std::vector<Cocycle> enumerate_cocycles(const GammaGroup& gg) {
  const auto& gam = gg.gamma();
  const auto& G = gg.group();
  const auto& gens = gam.generators();
  constexpr auto unset = static_cast<element_t>(-1);
  std::vector<std::vector<element_t>> tables;
  std::vector<element_t> images(gens.size(), 0);
  auto extend = [&]() -> std::optional<std::vector<element_t>> {
    std::vector<element_t> c(gam.order(), unset);
    c[0] = 0;
    std::vector<element_t> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const auto x = queue[qi];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto y = gam.mul(x, gens[i]);
        const auto cy = G.mul(c[x], gg.act(x, images[i]));
        if (c[y] == unset) {
          c[y] = cy;
          queue.push_back(y);
        } else if (c[y] != cy) {
          return std::nullopt;
        }
      }
    }
    return c;
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (auto c = extend()) tables.push_back(std::move(*c));
      return;
    }
    for (element_t y = 0; y < G.order(); ++y) {
      images[depth] = y;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(tables.begin(), tables.end());
  std::vector<Cocycle> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.push_back(trusted_cocycle(gg, std::move(t)));
  return out;
}

struct H1Class {
  Cocycle representative;  // lexicographically smallest cocycle in the class
  std::size_t size{};
  std::vector<std::size_t> members;  // indices into the enumerate_cocycles list
};

struct H1 {
  std::vector<Cocycle> cocycles;  // enumerate_cocycles order
  std::vector<H1Class> classes;   // trivial class first, then by size, then representative
  std::vector<std::size_t> class_of;

  std::size_t class_index(const Cocycle& c) const {
    auto it = std::lower_bound(cocycles.begin(), cocycles.end(), c.values(),
                               [](const Cocycle& a, const std::vector<element_t>& v) { return a.values() < v; });
    if (it == cocycles.end() || it->values() != c.values()) throw precondition_error("not a cocycle of this gamma-group");
    return class_of[static_cast<std::size_t>(it - cocycles.begin())];
  }
};

/// The pointed set H¹(Γ, G) as twisted-conjugacy classes of cocycles.
inline H1 h1(const GammaGroup& gg) {
  H1 out;
  out.cocycles = enumerate_cocycles(gg);
  std::map<std::vector<element_t>, std::size_t> index;
  for (std::size_t i = 0; i < out.cocycles.size(); ++i) index.emplace(out.cocycles[i].values(), i);
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> provisional(out.cocycles.size(), none);
  std::vector<H1Class> classes;
  for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
    if (provisional[i] != none) continue;
    H1Class cls{out.cocycles[i], 0, {}};
    for (element_t g = 0; g < gg.group().order(); ++g) {
      const auto j = index.at(twisted_conjugate(out.cocycles[i], g).values());
      if (provisional[j] == none) {
        provisional[j] = classes.size();
        cls.members.push_back(j);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.size = cls.members.size();
    classes.push_back(std::move(cls));
  }
  // classes[0] holds the all-zero table, which sorts first among cocycles.
  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin() + (order.empty() ? 0 : 1), order.end(), [&](std::size_t a, std::size_t b) {
    if (classes[a].size != classes[b].size) return classes[a].size < classes[b].size;
    return classes[a].representative.values() < classes[b].representative.values();
  });
  std::vector<std::size_t> rank(classes.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  out.class_of.resize(out.cocycles.size());
  for (std::size_t i = 0; i < out.cocycles.size(); ++i) out.class_of[i] = rank[provisional[i]];
  for (auto k : order) out.classes.push_back(std::move(classes[k]));
  return out;
}

/// γ⋆'g = c(γ)·(γ⋆g)·c(γ)⁻¹: the Γ-group of automorphisms of the torsor of c.
inline GammaGroup inner_form(const Cocycle& c) {
  const auto& gg = c.gamma_group();
  const auto& G = gg.group();
  std::vector<Permutation> act(gg.gamma().order(), Permutation(G.order()));
  for (element_t s = 0; s < gg.gamma().order(); ++s)
    for (element_t x = 0; x < G.order(); ++x) act[s][x] = G.conj(c(s), gg.act(s, x));
  return GammaGroup::from_action(gg.gamma(), G, std::move(act));
}

/// c⁻¹ as a cocycle of inner_form(c); twisting by it undoes twisting by c.
inline Cocycle inverse_cocycle(const Cocycle& c) {
  const auto inner = inner_form(c);
  std::vector<element_t> v(c.values().size());
  for (element_t s = 0; s < v.size(); ++s) v[s] = inner.group().inv(c(s));
  return validate_cocycle(inner, std::move(v));
}

/// First (γ, g) with f(γ⋆g) ≠ γ⋆'f(g), if any.
inline std::optional<std::pair<element_t, element_t>> equivariance_failure(const GroupHom& f, const GammaGroup& src,
                                                                           const GammaGroup& dst) {
  for (element_t s = 0; s < src.gamma().order(); ++s)
    for (element_t x = 0; x < src.group().order(); ++x)
      if (f(src.act(s, x)) != dst.act(s, f(x))) return std::pair{s, x};
  return std::nullopt;
}

/// f∘c for a Γ-equivariant homomorphism f: G → G'.
inline Cocycle push_cocycle(const Cocycle& c, const GroupHom& f, const GammaGroup& target) {
  if (!(target.gamma() == c.gamma_group().gamma())) throw precondition_error("different gamma");
  if (auto w = equivariance_failure(f, c.gamma_group(), target))
    throw precondition_error("homomorphism is not gamma-equivariant at (" + std::to_string(w->first) + ", " +
                             std::to_string(w->second) + ")");
  std::vector<element_t> v;
  for (auto x : c.values()) v.push_back(f(x));
  return trusted_cocycle(target, std::move(v));
}

/// Restriction of c to a subgroup of Γ.
inline Cocycle restrict_cocycle(const Cocycle& c, const Subgroup& sub) {
  std::vector<element_t> v;
  for (auto s : sub.members()) v.push_back(c(s));
  return trusted_cocycle(c.gamma_group().restrict(sub), std::move(v));
}

/// G/K with the induced Γ-action; K must be normal and Γ-stable.
struct GammaQuotient {
  GammaGroup group;
  GroupHom projection;
};

inline GammaQuotient gamma_quotient(const GammaGroup& gg, const Subgroup& k) {
  for (element_t s = 0; s < gg.gamma().order(); ++s)
    for (auto x : k.members())
      if (!k.contains(gg.act(s, x)))
        throw precondition_error("subgroup is not gamma-stable: " + std::to_string(s) + " moves " + std::to_string(x));
  auto q = quotient(gg.group(), k);
  const auto& Q = q.group;
  // one preimage per coset
  std::vector<element_t> rep(Q.order(), 0);
  for (element_t x = gg.group().order(); x-- > 0;) rep[q.projection(x)] = x;
  std::vector<Permutation> act(gg.gamma().order(), Permutation(Q.order()));
  for (element_t s = 0; s < gg.gamma().order(); ++s)
    for (element_t y = 0; y < Q.order(); ++y) act[s][y] = q.projection(gg.act(s, rep[y]));
  return {GammaGroup::from_action(gg.gamma(), Q, std::move(act)), q.projection};
}

}  // namespace torsor
