#include <gtest/gtest.h>

#include "oracles.hpp"
#include "torsor/group_catalog.hpp"
#include "torsor/twist.hpp"

using namespace torsor;

namespace {

GammaSet translation_set(const FiniteGroup& g) {
  std::vector<element_t> t;
  for (element_t s = 0; s < g.order(); ++s)
    for (element_t x = 0; x < g.order(); ++x) t.push_back(g.mul(s, x));
  return GammaSet::from_table(g, g.order(), std::move(t));
}

GammaSet conjugation_set(const FiniteGroup& g) {
  std::vector<element_t> t;
  for (element_t s = 0; s < g.order(); ++s)
    for (element_t x = 0; x < g.order(); ++x) t.push_back(g.conj(s, x));
  return GammaSet::from_table(g, g.order(), std::move(t));
}

Subgroup a3(const FiniteGroup& s3) { return Subgroup::from_members(s3, {0, *s3.find("(1 2 3)"), *s3.find("(1 3 2)")}); }

}  // namespace

TEST(GammaSet, OrbitExamples) {
  const auto s3 = catalog::symmetric(3);
  EXPECT_EQ(orbits(GammaSet::trivial(s3, 4)).size(), 4u);
  EXPECT_EQ(orbits(translation_set(s3)).size(), 1u);
  EXPECT_EQ(orbits(conjugation_set(s3)).size(), 3u);
}

TEST(GammaSet, FixedPointExamples) {
  const auto s3 = catalog::symmetric(3);
  EXPECT_EQ(fixed_points(GammaSet::trivial(s3, 3)), (std::vector<element_t>{0, 1, 2}));
  EXPECT_EQ(fixed_points(conjugation_set(s3)), (std::vector<element_t>{0}));
  EXPECT_TRUE(fixed_points(translation_set(catalog::cyclic(3))).empty());
}

TEST(GammaSet, RestrictExamples) {
  const auto s3 = catalog::symmetric(3);
  const auto conj = conjugation_set(s3);
  EXPECT_EQ(restrict(conj, Subgroup::whole(s3)), conj);
  EXPECT_EQ(orbits(restrict(conj, a3(s3))).size(), 4u);
  EXPECT_EQ(orbits(restrict(conj, Subgroup::trivial(s3))).size(), 6u);
}

TEST(GammaSet, GeometricConnectedness) {
  const auto s3 = catalog::symmetric(3);
  EXPECT_TRUE(is_geometrically_connected(translation_set(s3), Subgroup::whole(s3)));
  EXPECT_FALSE(is_geometrically_connected(translation_set(s3), a3(s3)));
  EXPECT_TRUE(is_geometrically_connected(GammaSet::trivial(s3, 1), Subgroup::trivial(s3)));
}

TEST(GammaSet, RejectsNonActions) {
  const auto z2 = catalog::cyclic(2);
  EXPECT_THROW(GammaSet::from_table(z2, 2, {0, 1, 0, 0}), invariant_error);  // row not a bijection
  EXPECT_THROW(GammaSet::from_table(z2, 2, {1, 0, 1, 0}), invariant_error);  // identity moves points
  EXPECT_THROW(GammaSet::from_table(catalog::cyclic(3), 2, {0, 1, 1, 0, 1, 0}), invariant_error);  // not a hom
}

TEST(GammaSet, EquivariantIsomExamples) {
  for (const auto& g : catalog::small_groups()) {
    auto gg = GammaGroup::trivial(catalog::trivial(), g);
    auto reg = regular_object(gg);
    auto isos = equivariant_isoms(reg, reg);
    ASSERT_EQ(isos.size(), g.order()) << g.name();
    EXPECT_EQ(isos.size(), oracle::equivariant_count(reg, reg)) << g.name();
    // each is right translation by the image of the identity
    for (const auto& f : isos)
      for (element_t x = 0; x < g.order(); ++x) EXPECT_EQ(f[x], g.mul(x, f[0]));
  }
  const auto gg = GammaGroup::trivial(catalog::cyclic(2), catalog::cyclic(2));
  EXPECT_TRUE(equivariant_isoms(point_object(gg), point_object(gg, 2)).empty());
  EXPECT_EQ(equivariant_isoms(point_object(gg), point_object(gg)).size(), 1u);
}

TEST(GammaSet, EquivariantIsomsMatchBruteForceOnCorpusObjects) {
  const auto z2 = catalog::cyclic(2);
  std::vector<GammaGroup> ggs;
  for (const auto& g : {catalog::cyclic(3), catalog::symmetric(3), catalog::cyclic(4), catalog::klein()}) {
    ggs.push_back(GammaGroup::trivial(z2, g));
    const auto aut = automorphism_group(g);
    for (const auto& rho : enumerate_homs(z2, aut))
      if (!(rho == GroupHom::trivial(z2, aut))) ggs.push_back(GammaGroup::from_hom_to_aut(rho, g));
  }
  for (const auto& gg : ggs) {
    std::vector<GObject> objs{point_object(gg, 2), regular_object(gg), conjugation_object(gg)};
    for (const auto& c : enumerate_cocycles(gg)) objs.push_back(twist(regular_object(gg), c));
    for (const auto& a : objs)
      for (const auto& b : objs) {
        if (!(a.gamma_group() == b.gamma_group())) continue;
        auto isos = equivariant_isoms(a, b);
        EXPECT_EQ(isos.size(), oracle::equivariant_count(a, b));
        for (const auto& f : isos) EXPECT_TRUE(is_equivariant(a, b, f));
        EXPECT_EQ(find_equivariant_isom(a, b).has_value(), !isos.empty());
      }
  }
}

TEST(GammaSet, RestrictionRefinesOrbits) {
  for (const auto& g : catalog::small_groups()) {
    if (g.order() > 8) continue;
    const auto s = conjugation_set(g);
    for (const auto& h : all_subgroups(g)) {
      auto fine = orbits(restrict(s, h));
      auto coarse = orbits(s);
      EXPECT_GE(fine.size(), coarse.size());
      for (const auto& o : fine) {
        bool inside = false;
        for (const auto& c : coarse)
          inside = inside || std::includes(c.begin(), c.end(), o.begin(), o.end());
        EXPECT_TRUE(inside) << g.name();
      }
      EXPECT_EQ(fine.size(), oracle::orbit_count(
                                 s.size(), [&](element_t i, element_t x) { return s.act(h.members()[i], x); },
                                 h.order()));
    }
  }
}

TEST(GammaSet, FixedPointsAreSingletonOrbits) {
  for (const auto& g : catalog::small_groups()) {
    const auto s = conjugation_set(g);
    std::size_t singletons = 0;
    for (const auto& o : orbits(s)) singletons += o.size() == 1;
    EXPECT_EQ(fixed_points(s).size(), singletons);
    EXPECT_EQ(fixed_points(s).size(), oracle::center_order(g));
  }
}

TEST(GObject, StandardObjectsSatisfyAxioms) {
  const auto s3 = catalog::symmetric(3);
  const auto gg = GammaGroup::trivial(s3, s3);
  auto k = Subgroup::from_members(s3, {0, *s3.find("(1 2 3)"), *s3.find("(1 3 2)")});
  for (const auto& o : {point_object(gg), regular_object(gg), conjugation_object(gg), coset_object(gg, k),
                        disjoint_union(point_object(gg), coset_object(gg, k)), product(regular_object(gg), coset_object(gg, k))}) {
    EXPECT_NO_THROW(GObject::make(o.base(), o.gamma_group(), o.gaction()));
  }
  EXPECT_EQ(product(regular_object(gg), coset_object(gg, k)).size(), 12u);
}

TEST(GObject, RejectsNonEquivariantGAction) {
  const auto z2 = catalog::cyclic(2);
  const auto z3 = catalog::cyclic(3);
  // Z2 inverts Z3, but the Γ-set is trivial while Z3 translates: not compatible
  auto gg = GammaGroup::from_action(z2, z3, {{0, 1, 2}, {0, 2, 1}});
  auto reg = regular_object(GammaGroup::trivial(z2, z3));
  EXPECT_THROW(GObject::make(reg.base(), gg, reg.gaction()), invariant_error);
}
