#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torsor/torsor.hpp"

namespace torsor {

/// Outcome of checking one statement over a family of instances.
struct TwistReport {
  std::string claim;
  std::size_t instances = 0;
  std::size_t witnessed = 0;
  std::vector<std::string> failures;  // one line per failing instance

  bool passing() const noexcept { return failures.empty() && witnessed == instances; }

  void record(bool ok, const std::string& instance, const std::string& detail = {}) {
    ++instances;
    if (ok) {
      ++witnessed;
    } else {
      failures.push_back(detail.empty() ? instance : instance + " " + detail);
    }
  }

  void merge(const TwistReport& other) {
    instances += other.instances;
    witnessed += other.witnessed;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

/// Same points and G-table; γ acts by x ↦ c(γ)·(γ·x). The result is an
/// object over inner_form(c).
inline GObject twist(const GObject& xi, const Cocycle& c) {
  if (!(xi.gamma_group() == c.gamma_group())) throw precondition_error("twist: object and cocycle over different gamma-groups");
  const auto n = xi.size();
  std::vector<element_t> gam;
  for (element_t s = 0; s < c.gamma_group().gamma().order(); ++s)
    for (element_t x = 0; x < n; ++x) gam.push_back(xi.g_act(c(s), xi.gamma_act(s, x)));
  return trusted_gobject(GammaSet::from_table(xi.base().gamma(), n, std::move(gam)), inner_form(c), xi.gaction());
}

/// B ∧^R η for an (L, R)-bitorsor B and an R-object η, as the quotient set of
/// B × η; the result is an L-object. With B = bitorsor_from_cocycle(c) this is
/// the twist of η by c.
inline GObject contract_object(const Bitorsor& b, const GObject& eta) {
  if (!(b.right_group() == eta.gamma_group())) throw precondition_error("contract_object: group mismatch");
  const auto& R = b.right_group().group();
  auto cls = contract(b.size(), eta.size(), R, [&](element_t x, element_t r) { return b.right(x, r); },
                      [&](element_t r, element_t z) { return eta.g_act(r, z); });
  const auto n = cls.representative.size();
  const auto& gam = b.right_group().gamma();
  std::vector<element_t> gt, lt;
  for (element_t s = 0; s < gam.order(); ++s)
    for (auto [x, z] : cls.representative) gt.push_back(cls(b.gamma_act(s, x), eta.gamma_act(s, z)));
  for (element_t l = 0; l < b.left_group().group().order(); ++l)
    for (auto [x, z] : cls.representative) lt.push_back(cls(b.left(l, x), z));
  return GObject::make(GammaSet::from_table(gam, n, std::move(gt)), b.left_group(), std::move(lt));
}

/// A group of permutations of a point set, with an index from permutation to
/// element identifier.
struct PermGroup {
  FiniteGroup group;
  std::vector<Permutation> elements;  // lexicographic, identity first
  std::map<Permutation, element_t> index;

  static PermGroup from_elements(std::string name, std::vector<Permutation> elems) {
    PermGroup out;
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) out.index.emplace(elems[i], static_cast<element_t>(i));
    out.group = FiniteGroup::from_permutation_list(std::move(name), elems);
    out.elements = std::move(elems);
    return out;
  }

  element_t id(const Permutation& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw invariant_error("permutation outside the group: " + perm::to_cycles(p));
    return it->second;
  }
};

inline PermGroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t = perm::identity(n), r(n);
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<element_t>((i + 1) % n);
    gens = {t, r};
  }
  return PermGroup::from_elements("S" + std::to_string(n), FiniteGroup::close_permutations(n, gens, 1u << 20));
}

/// Γ acting on a group of permutations of the points of `s` by conjugation.
inline GammaGroup conjugation_gamma_group(const PermGroup& auts, const GammaSet& s) {
  std::vector<Permutation> act;
  for (element_t g = 0; g < s.gamma().order(); ++g) {
    const auto row = s.row(g);
    const auto row_inv = perm::inverse(row);
    Permutation a(auts.elements.size());
    for (std::size_t i = 0; i < auts.elements.size(); ++i)
      a[i] = auts.id(perm::compose(row, perm::compose(auts.elements[i], row_inv)));
    act.push_back(std::move(a));
  }
  return GammaGroup::from_action(s.gamma(), auts.group, std::move(act));
}

/// The automorphism Γ-group of a Γ-set in the category of Γ-sets: all
/// permutations of the points, Γ acting by conjugation.
struct SetAutomorphisms {
  PermGroup perms;
  GammaGroup gamma_group;
};

inline SetAutomorphisms set_automorphisms(const GammaSet& s) {
  auto sym = symmetric_group(s.size());
  auto gg = conjugation_gamma_group(sym, s);
  return {std::move(sym), std::move(gg)};
}

/// φ: G → Aut(ξ) sending g to the permutation it induces.
inline GroupHom action_hom(const GObject& xi, const PermGroup& auts) {
  std::vector<element_t> m;
  for (element_t g = 0; g < xi.gamma_group().group().order(); ++g) m.push_back(auts.id(xi.g_row(g)));
  return GroupHom::from_map(xi.gamma_group().group(), auts.group, std::move(m));
}

/// Isom(a, b) in a category of Γ-sets with automorphism group `auts` of a:
/// the bijections f = f0∘α (α ∈ auts) with Γ acting by f ↦ γ_b∘f∘γ_a⁻¹,
/// as a right torsor under auts by precomposition. Point i is f0∘auts[i].
inline Torsor isom_torsor(const GammaSet& a, const GammaSet& b, const Permutation& f0, const PermGroup& auts,
                          const GammaGroup& auts_gg) {
  const auto n = auts.elements.size();
  std::map<Permutation, element_t> point;
  std::vector<Permutation> maps;
  for (std::size_t i = 0; i < n; ++i) {
    maps.push_back(perm::compose(f0, auts.elements[i]));
    point.emplace(maps.back(), static_cast<element_t>(i));
  }
  std::vector<element_t> gt, rt;
  for (element_t s = 0; s < a.gamma().order(); ++s) {
    const auto ra_inv = perm::inverse(a.row(s));
    const auto rb = b.row(s);
    for (const auto& f : maps) {
      auto it = point.find(perm::compose(rb, perm::compose(f, ra_inv)));
      if (it == point.end()) throw invariant_error("gamma does not preserve the isomorphism set");
      gt.push_back(it->second);
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& f : maps) rt.push_back(point.at(perm::compose(f, auts.elements[k])));
  return Torsor::make(GammaSet::from_table(a.gamma(), n, std::move(gt)), auts_gg, std::move(rt));
}

/// Right-G-isomorphisms p → q as an (Aut q, Aut p)-bitorsor. Automorphisms of
/// a torsor t are identified with G through the basepoint 0 of t (k acts by
/// 0·x ↦ 0·(kx)), so Aut t = inner_form(cocycle_from_torsor(t, 0)). The
/// isomorphism sending 0 to y is labelled y.
inline Bitorsor twist_torsor(const Torsor& p, const Torsor& q) {
  if (!(p.gamma_group() == q.gamma_group())) throw precondition_error("twist_torsor: group mismatch");
  const auto& gg = p.gamma_group();
  const auto& G = gg.group();
  const auto& gam = gg.gamma();
  const auto n = q.size();
  const auto cp = cocycle_from_torsor(p, 0);
  const auto cq = cocycle_from_torsor(q, 0);
  std::vector<element_t> gt, lt, rt;
  for (element_t s = 0; s < gam.order(); ++s) {
    // γ_p⁻¹(0) = 0·x0
    const auto x0 = p.divide(0, p.gamma_act(gam.inv(s), 0));
    for (element_t y = 0; y < n; ++y) gt.push_back(q.gamma_act(s, q.right(y, x0)));
  }
  for (element_t k = 0; k < G.order(); ++k)
    for (element_t y = 0; y < n; ++y) lt.push_back(q.right(0, G.mul(k, q.divide(0, y))));
  for (element_t a = 0; a < G.order(); ++a)
    for (element_t y = 0; y < n; ++y) rt.push_back(q.right(y, a));
  return Bitorsor::make(GammaSet::from_table(gam, n, std::move(gt)), inner_form(cq), inner_form(cp), std::move(lt),
                        std::move(rt));
}

/// A right G-torsor as an (Aut t, G)-bitorsor, Aut t identified with G
/// through basepoint 0 as in twist_torsor.
inline Bitorsor bitorsor_from_torsor(const Torsor& t) {
  const auto& G = t.gamma_group().group();
  std::vector<element_t> lt;
  for (element_t k = 0; k < G.order(); ++k)
    for (element_t y = 0; y < t.size(); ++y) lt.push_back(t.right(0, G.mul(k, t.divide(0, y))));
  return Bitorsor::make(t.base(), inner_form(cocycle_from_torsor(t, 0)), t.gamma_group(), std::move(lt),
                        t.right_table());
}

/// G-equivariant automorphisms of ξ with Γ acting by conjugation.
struct ObjectAutomorphisms {
  PermGroup perms;
  GammaGroup gamma_group;
};

inline ObjectAutomorphisms object_automorphisms(const GObject& xi) {
  auto perms = PermGroup::from_elements("Aut", g_isoms(xi, xi));
  auto gg = conjugation_gamma_group(perms, xi.base());
  return {std::move(perms), std::move(gg)};
}

/// ξ regarded as an object under its own automorphism Γ-group.
inline GObject tautological_object(const GObject& xi, const ObjectAutomorphisms& aut) {
  std::vector<element_t> ga;
  for (const auto& a : aut.perms.elements) ga.insert(ga.end(), a.begin(), a.end());
  return GObject::make(xi.base(), aut.gamma_group, std::move(ga));
}

struct IsomObject {
  ObjectAutomorphisms aut;  // of ξ
  Torsor torsor;            // Isom_G(ξ, ξ') under aut, basepoint 0 = smallest isomorphism
  Permutation basepoint;    // the G-isomorphism at point 0
  Cocycle cocycle;          // of torsor at point 0
  GObject twisted;          // ξ twisted by the torsor, same G-action as ξ
  Permutation witness;      // an isomorphism twisted → ξ' found by search
};

/// Isom_G(ξ, ξ') as a right torsor under Aut_G(ξ), together with the twist of
/// ξ by it and an isomorphism to ξ'. Throws precondition_error when ξ and ξ'
/// are not isomorphic as G-sets.
inline IsomObject isom_object(const GObject& xi, const GObject& xi_prime) {
  if (!(xi.gamma_group() == xi_prime.gamma_group())) throw precondition_error("isom_object: group mismatch");
  const auto isos = g_isoms(xi, xi_prime);
  if (isos.empty()) throw precondition_error("not locally isomorphic");
  auto aut = object_automorphisms(xi);
  const auto& f0 = isos.front();
  auto t = isom_torsor(xi.base(), xi_prime.base(), f0, aut.perms, aut.gamma_group);
  auto c = cocycle_from_torsor(t, 0);
  auto twisted_set = twist(tautological_object(xi, aut), c).base();
  auto twisted = GObject::make(twisted_set, xi.gamma_group(), xi.gaction());
  auto w = find_equivariant_isom(twisted, xi_prime);
  if (!w) throw invariant_error("twist by the isomorphism torsor is not isomorphic to the target");
  return {std::move(aut), std::move(t), f0, std::move(c), std::move(twisted), std::move(*w)};
}

/// Orbits of a Γ-set with one point stabilizer each, reported as the
/// lexicographically smallest conjugate.
struct SelfTwistComponent {
  std::vector<element_t> orbit;
  Subgroup stabilizer;
};

struct SelfTwistDecomposition {
  std::vector<SelfTwistComponent> components;
  std::size_t fixed_count = 0;
};

inline Subgroup smallest_conjugate(const Subgroup& h) {
  Subgroup best = h;
  for (element_t g = 0; g < h.parent().order(); ++g) {
    auto c = h.conjugate(g);
    if (c.members() < best.members()) best = c;
  }
  return best;
}

inline Subgroup stabilizer(const GammaSet& s, element_t x) {
  std::vector<element_t> m;
  for (element_t g = 0; g < s.gamma().order(); ++g)
    if (s.act(g, x) == x) m.push_back(g);
  return Subgroup::from_members(s.gamma(), std::move(m));
}

/// Γ-orbits of Isom_G(P, P) for P the torsor of c.
inline SelfTwistDecomposition self_twist_decomposition(const Cocycle& c) {
  const auto p = torsor_from_cocycle(c);
  const auto t = twist_torsor(p, p);
  SelfTwistDecomposition out;
  for (auto& orb : orbits(t.base())) {
    auto stab = smallest_conjugate(stabilizer(t.base(), orb.front()));
    out.components.push_back({std::move(orb), std::move(stab)});
  }
  out.fixed_count = fixed_points(t.base()).size();
  return out;
}

/// Γ-equivariant abelianization G → G/[G,G].
inline GammaQuotient abelianization(const GammaGroup& gg) { return gamma_quotient(gg, commutator_subgroup(gg.group())); }

}  // namespace torsor
