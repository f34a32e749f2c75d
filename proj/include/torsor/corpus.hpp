#pragma once

#include <string>
#include <vector>

#include "torsor/cover.hpp"
#include "torsor/group_catalog.hpp"

namespace torsor::corpus {

struct NamedObject {
  std::string name;
  GObject object;
};

/// A Γ-group with the objects used to exercise twisting over it.
struct GammaGroupCase {
  std::string name;  // "<Γ>/<G>/<action>"
  GammaGroup gg;
  std::vector<NamedObject> objects;
};

inline std::string cocycle_name(const Cocycle& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.values().size(); ++i) s += (i ? "," : "") + std::to_string(c.values()[i]);
  return s + "]";
}

inline std::vector<FiniteGroup> gammas(std::size_t max_order) {
  std::vector<FiniteGroup> out;
  for (auto& g : catalog::small_groups())
    if (g.order() <= std::min<std::size_t>(max_order, 6)) out.push_back(g);
  return out;
}

/// Smallest proper nontrivial subgroup that is normal and Γ-stable, if any.
inline std::optional<Subgroup> stable_normal_subgroup(const GammaGroup& gg) {
  for (const auto& k : all_subgroups(gg.group())) {
    if (k.order() == 1 || k.order() == gg.group().order() || !k.is_normal()) continue;
    bool stable = true;
    for (element_t s = 0; s < gg.gamma().order() && stable; ++s)
      for (auto x : k.members()) stable = stable && k.contains(gg.act(s, x));
    if (stable) return k;
  }
  return std::nullopt;
}

/// Point, two points, regular, conjugation, and when G has a Γ-stable normal
/// subgroup K also G/K and pt ⊔ G/K.
inline std::vector<NamedObject> objects_for(const GammaGroup& gg) {
  std::vector<NamedObject> out{{"point", point_object(gg)},
                               {"two-points", point_object(gg, 2)},
                               {"regular", regular_object(gg)},
                               {"conjugation", conjugation_object(gg)}};
  if (auto k = stable_normal_subgroup(gg)) {
    auto cosets = coset_object(gg, *k);
    out.push_back({"cosets", cosets});
    out.push_back({"point+cosets", disjoint_union(point_object(gg), cosets)});
  }
  return out;
}

/// Every Γ of order ≤ min(6, max_order) against every G of order
/// ≤ min(8, max_order): the trivial action and, when Γ → Aut(G) has a
/// nontrivial homomorphism, the lexicographically first one.
inline std::vector<GammaGroupCase> gamma_group_cases(std::size_t max_order = 8) {
  std::vector<GammaGroupCase> out;
  for (const auto& gamma : gammas(max_order))
    for (const auto& g : catalog::small_groups()) {
      if (g.order() > std::min<std::size_t>(max_order, 8)) continue;
      auto trivial = GammaGroup::trivial(gamma, g);
      out.push_back({gamma.name() + "/" + g.name() + "/trivial", trivial, objects_for(trivial)});
      const auto aut = automorphism_group(g);
      for (const auto& rho : enumerate_homs(gamma, aut))
        if (!(rho == GroupHom::trivial(gamma, aut))) {
          auto gg = GammaGroup::from_hom_to_aut(rho, g);
          out.push_back({gamma.name() + "/" + g.name() + "/outer", gg, objects_for(gg)});
          break;
        }
    }
  return out;
}

/// The cases for the cocycle-formula checks: Γ ∈ {Z2, S3}, G ∈ {Z3, S3, D4}.
inline std::vector<GammaGroupCase> cocycle_formula_cases() {
  std::vector<GammaGroupCase> out;
  for (const auto& c : gamma_group_cases(8)) {
    const auto& gn = c.gg.gamma().name();
    const auto& n = c.gg.group().name();
    if ((gn == "Z2" || gn == "S3") && (n == "Z3" || n == "S3" || n == "D4")) out.push_back(c);
  }
  return out;
}

struct NamedCover {
  std::string name;
  CoverSpec cover;
};

namespace detail {

inline GroupHom first_surjection(const FiniteGroup& a, const FiniteGroup& b, std::size_t skip = 0) {
  HomConstraints hc;
  hc.surjective = true;
  auto all = enumerate_homs(a, b, hc);
  if (all.size() <= skip) throw invariant_error("corpus: no surjection " + a.name() + " -> " + b.name());
  return all[skip];
}

inline GroupHom projection_first(const FiniteGroup& prod, const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<element_t> m;
  for (element_t x = 0; x < prod.order(); ++x) m.push_back(static_cast<element_t>(x / b.order()));
  return GroupHom::from_map(prod, a, std::move(m));
}

inline GroupHom projection_second(const FiniteGroup& prod, const FiniteGroup& b) {
  std::vector<element_t> m;
  for (element_t x = 0; x < prod.order(); ++x) m.push_back(static_cast<element_t>(x % b.order()));
  return GroupHom::from_map(prod, b, std::move(m));
}

}  // namespace detail

/// Covers of order ≤ 24 chosen to hit: sections that are all conjugate, no
/// sections at all, constant covers, Ḡ = G, and nonabelian G/Ḡ.
inline std::vector<NamedCover> covers() {
  using namespace catalog;
  const auto z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4), z6 = cyclic(6), s3 = symmetric(3), s4 = symmetric(4),
             a4 = alternating(4), d4 = dihedral(4), q8 = quaternion(), v4 = klein();
  const auto z2z4 = direct_product(z2, z4, "Z2xZ4");
  const auto z2s3 = direct_product(z2, s3, "Z2xS3");
  const auto z3s3 = direct_product(z3, s3, "Z3xS3");
  const auto z2z3 = direct_product(z2, z3, "Z2xZ3");
  std::vector<NamedCover> out;
  auto add = [&](std::string name, const GroupHom& u, const GroupHom& phi) {
    out.push_back({std::move(name), CoverSpec::make(u, phi)});
  };
  const auto sign = detail::first_surjection(s3, z2);
  add("S3-sign/id", sign, GroupHom::identity(s3));
  add("Z4-mod2/id", detail::first_surjection(z4, z2), GroupHom::identity(z4));
  add("Z4-mod2/mod2", detail::first_surjection(z4, z2), detail::first_surjection(z4, z2));
  add("Q8-to-Z2/id", detail::first_surjection(q8, z2), GroupHom::identity(q8));
  add("Q8-to-V4/id", detail::first_surjection(q8, v4), GroupHom::identity(q8));
  add("S3-id/id", GroupHom::identity(s3), GroupHom::identity(s3));
  add("S3-id/sign", GroupHom::identity(s3), sign);
  for (std::size_t k = 0; k < 3; ++k)
    add("D4-to-Z2#" + std::to_string(k) + "/id", detail::first_surjection(d4, z2, k), GroupHom::identity(d4));
  add("D4-to-V4/id", detail::first_surjection(d4, v4), GroupHom::identity(d4));
  add("D4-to-Z2/to-V4", detail::first_surjection(d4, z2), detail::first_surjection(d4, v4));
  add("Z2xS3-proj/proj", detail::projection_first(z2s3, z2, s3), detail::projection_second(z2s3, s3));
  add("Z2xS3-proj/id", detail::projection_first(z2s3, z2, s3), GroupHom::identity(z2s3));
  add("Z2xS3-sign/proj", detail::first_surjection(z2s3, z2, 1), detail::projection_second(z2s3, s3));
  add("Z3xS3-proj/id", detail::projection_first(z3s3, z3, s3), GroupHom::identity(z3s3));
  add("Z2xZ3-proj/id", detail::projection_first(z2z3, z2, z3), GroupHom::identity(z2z3));
  add("Z6-to-Z3/id", detail::first_surjection(z6, z3), GroupHom::identity(z6));
  add("Z6-to-Z2/to-Z3", detail::first_surjection(z6, z2), detail::first_surjection(z6, z3));
  add("V4-proj/proj", detail::projection_first(v4, z2, z2), detail::projection_second(v4, z2));
  add("Z2xZ4-to-Z2/id", detail::first_surjection(z2z4, z2), GroupHom::identity(z2z4));
  add("A4-to-Z3/id", detail::first_surjection(a4, z3), GroupHom::identity(a4));
  add("S4-sign/id", detail::first_surjection(s4, z2), GroupHom::identity(s4));
  add("S4-to-S3/id", detail::first_surjection(s4, s3), GroupHom::identity(s4));
  add("S4-to-S3/to-S3", detail::first_surjection(s4, s3), detail::first_surjection(s4, s3));
  return out;
}

struct CoverCase {
  std::string name;
  const NamedCover* cover;
  Cocycle psi;
};

/// Every cover paired with every homomorphism Γ → G.
inline std::vector<CoverCase> cover_cases(const std::vector<NamedCover>& cs) {
  std::vector<CoverCase> out;
  for (const auto& c : cs)
    for (const auto& psi : enumerate_cocycles(c.cover.gamma_group()))
      out.push_back({c.name + " psi=" + cocycle_name(psi), &c, psi});
  return out;
}

struct NonGaloisCase {
  std::string name;
  CoverSpec cover;
  GroupHom nu;
};

/// Degree 3 and 4 covers ν∘φ with ν: G ↪ Sₙ.
inline std::vector<NonGaloisCase> nongalois_cases() {
  using namespace catalog;
  const auto z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4), s3 = symmetric(3), s4 = symmetric(4),
             d4 = dihedral(4), v4 = klein(), a4 = alternating(4);
  HomConstraints inj;
  inj.injective = true;
  auto embed = [&](const FiniteGroup& g, const FiniteGroup& sn) { return enumerate_homs(g, sn, inj).front(); };
  std::vector<NonGaloisCase> out;
  const auto sign = detail::first_surjection(s3, z2);
  out.push_back({"n3/S3-sign", CoverSpec::make(sign, GroupHom::identity(s3)), GroupHom::identity(s3)});
  out.push_back({"n3/S3-id", CoverSpec::make(GroupHom::identity(s3), GroupHom::identity(s3)), GroupHom::identity(s3)});
  out.push_back({"n3/Z3-id", CoverSpec::make(GroupHom::identity(z3), GroupHom::identity(z3)), embed(z3, s3)});
  out.push_back({"n3/Z6-to-Z2", CoverSpec::make(detail::first_surjection(cyclic(6), z2), detail::first_surjection(cyclic(6), z3)),
                 embed(z3, s3)});
  out.push_back({"n4/S4-sign", CoverSpec::make(detail::first_surjection(s4, z2), GroupHom::identity(s4)),
                 GroupHom::identity(s4)});
  out.push_back({"n4/D4-to-Z2", CoverSpec::make(detail::first_surjection(d4, z2), GroupHom::identity(d4)), embed(d4, s4)});
  out.push_back({"n4/D4-to-V4", CoverSpec::make(detail::first_surjection(d4, v4), GroupHom::identity(d4)), embed(d4, s4)});
  out.push_back({"n4/Z4-mod2", CoverSpec::make(detail::first_surjection(z4, z2), GroupHom::identity(z4)), embed(z4, s4)});
  out.push_back({"n4/A4-to-Z3", CoverSpec::make(detail::first_surjection(a4, z3), GroupHom::identity(a4)), embed(a4, s4)});
  return out;
}

}  // namespace torsor::corpus
