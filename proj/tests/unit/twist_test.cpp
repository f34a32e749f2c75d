#include <gtest/gtest.h>

#include "oracles.hpp"
#include "torsor/corpus.hpp"
#include "torsor/twist.hpp"

using namespace torsor;

namespace {

const FiniteGroup& s3() {
  static const auto g = catalog::symmetric(3);
  return g;
}

Subgroup a3() { return Subgroup::from_members(s3(), {0, *s3().find("(1 2 3)"), *s3().find("(1 3 2)")}); }

GammaGroup z2_s3() { return GammaGroup::trivial(catalog::cyclic(2), s3()); }

// b(γ)·c(γ): twisting by c and then by b (a cocycle of the inner form of c)
// moves x to b(γ)·c(γ)·(γ·x).
Cocycle composite(const Cocycle& b, const Cocycle& c) {
  const auto& G = c.gamma_group().group();
  std::vector<element_t> v;
  for (element_t s = 0; s < c.values().size(); ++s) v.push_back(G.mul(b(s), c(s)));
  return validate_cocycle(c.gamma_group(), std::move(v));
}

std::size_t class_of(const std::vector<Cocycle>& reps, const Cocycle& c) {
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (twisted_conjugate_equiv(reps[i], c)) return i;
  return reps.size();
}

}  // namespace

TEST(Twist, TrivialCocycleLeavesObjectUnchanged) {
  for (const auto& cs : corpus::gamma_group_cases(6))
    for (const auto& [name, xi] : cs.objects) EXPECT_EQ(twist(xi, trivial_cocycle(cs.gg)), xi) << cs.name << " " << name;
}

TEST(Twist, InverseUndoesTwist) {
  for (const auto& cs : corpus::cocycle_formula_cases())
    for (const auto& c : enumerate_cocycles(cs.gg))
      for (const auto& [name, xi] : cs.objects) {
        auto back = twist(twist(xi, c), inverse_cocycle(c));
        EXPECT_EQ(back.gamma_group(), xi.gamma_group());
        EXPECT_TRUE(find_equivariant_isom(back, xi).has_value()) << cs.name << " " << name;
      }
}

TEST(Twist, RegularS3ByIdentityIsTranslation) {
  const auto gg = GammaGroup::trivial(s3(), s3());
  auto t = twist(regular_object(gg), cocycle_from_hom(gg, GroupHom::identity(s3())));
  for (element_t s = 0; s < 6; ++s)
    for (element_t x = 0; x < 6; ++x) EXPECT_EQ(t.gamma_act(s, x), s3().mul(s, x));
  EXPECT_TRUE(fixed_points(t.base()).empty());
}

TEST(Twist, ResultIsAnObjectOverTheInnerForm) {
  for (const auto& cs : corpus::cocycle_formula_cases())
    for (const auto& c : enumerate_cocycles(cs.gg))
      for (const auto& [name, xi] : cs.objects) {
        auto t = twist(xi, c);
        EXPECT_NO_THROW(GObject::make(t.base(), inner_form(c), t.gaction())) << cs.name << " " << name;
        EXPECT_EQ(t.gaction(), xi.gaction());
      }
}

TEST(Twist, CompositionMatchesContractedProduct) {
  for (const auto& c1 : enumerate_cocycles(z2_s3())) {
    const auto inner = inner_form(c1);
    for (const auto& c2 : enumerate_cocycles(inner)) {
      const auto xi = regular_object(z2_s3());
      auto twice = twist(twist(xi, c1), c2);
      auto w = contracted_product(bitorsor_from_cocycle(c2), bitorsor_from_cocycle(c1));
      auto wc = right_cocycle(w, 0);
      EXPECT_EQ(wc, composite(c2, c1));
      auto once = twist(xi, wc);
      EXPECT_EQ(once.base(), twice.base());
      EXPECT_EQ(inner_form(wc), twice.gamma_group());
    }
  }
}

TEST(Twist, FunctorialityForEquivariantMaps) {
  const auto gg = z2_s3();
  const auto reg = regular_object(gg);
  const auto cos = coset_object(gg, a3());
  // x ↦ the coset of x is G-equivariant; it stays equivariant after twisting
  std::vector<element_t> f;
  for (element_t x = 0; x < 6; ++x) f.push_back(a3().contains(x) ? 0 : 1);
  for (const auto& c : enumerate_cocycles(gg)) {
    auto a = twist(reg, c), b = twist(cos, c);
    for (element_t s = 0; s < 2; ++s)
      for (element_t x = 0; x < 6; ++x) EXPECT_EQ(f[a.gamma_act(s, x)], b.gamma_act(s, f[x]));
  }
}

TEST(Twist, QuotientAgreesWithPushedCocycle) {
  const auto gg = z2_s3();
  for (const auto& k : {Subgroup::trivial(s3()), a3(), Subgroup::whole(s3())}) {
    auto q = gamma_quotient(gg, k);
    auto xi = regular_object(q.group);
    for (const auto& c : enumerate_cocycles(gg)) {
      auto lhs = twist(xi, push_cocycle(c, q.projection, q.group));
      auto rhs = twist(pull_back(xi, q.projection, gg), c);
      EXPECT_EQ(lhs.base(), rhs.base());
      if (k.order() == 6) {
        EXPECT_EQ(lhs.base(), xi.base());
      }
    }
  }
}

TEST(Twist, BaseChangeIsExact) {
  const auto gg = GammaGroup::trivial(s3(), s3());
  const auto c = cocycle_from_hom(gg, GroupHom::identity(s3()));
  for (const auto& sub : {Subgroup::whole(s3()), a3(), Subgroup::trivial(s3())})
    for (const auto& xi : {regular_object(gg), conjugation_object(gg), coset_object(gg, a3())}) {
      auto lhs = restrict(twist(xi, c), sub);
      auto rhs = twist(restrict(xi, sub), restrict_cocycle(c, sub));
      EXPECT_EQ(lhs.base(), rhs.base());
      if (sub.order() == 1) {
        EXPECT_EQ(fixed_points(rhs.base()).size(), xi.size());
      }
    }
}

TEST(Twist, OrbitSpaceCommutesWithTwist) {
  const auto gg = z2_s3();
  auto q = gamma_quotient(gg, a3());
  for (const auto& c : enumerate_cocycles(gg)) {
    auto xi = conjugation_object(gg);
    auto lhs = orbit_space(twist(xi, c), a3(), gamma_quotient(inner_form(c), a3()));
    auto rhs = twist(orbit_space(xi, a3(), q), push_cocycle(c, q.projection, q.group));
    EXPECT_EQ(lhs.base(), rhs.base());
  }
}

TEST(IsomObject, SelfIsomorphismTorsorIsTrivial) {
  const auto gg = z2_s3();
  for (const auto& xi : {regular_object(gg), conjugation_object(gg), coset_object(gg, a3())}) {
    auto r = isom_object(xi, xi);
    EXPECT_FALSE(fixed_points(r.torsor.base()).empty());
    EXPECT_TRUE(twisted_conjugate_equiv(r.cocycle, trivial_cocycle(r.cocycle.gamma_group())).has_value());
    EXPECT_TRUE(is_equivariant(r.twisted, xi, r.witness));
  }
}

TEST(IsomObject, ReconstructsTwistedObject) {
  // over an abelian G with Γ acting, the inner form of every cocycle is the
  // original Γ-group, so ξ and its twist live over the same Γ-group
  const auto gg = GammaGroup::from_action(catalog::cyclic(2), catalog::cyclic(3), {{0, 1, 2}, {0, 2, 1}});
  for (const auto& c : enumerate_cocycles(gg)) {
    const auto xi = regular_object(gg);
    const auto target = twist(xi, c);
    auto r = isom_object(xi, target);
    EXPECT_TRUE(is_equivariant(r.twisted, target, r.witness));
    EXPECT_EQ(r.torsor.size(), 3u);
    // Aut_G of the regular object is right translation, so Isom has a Γ-fixed point iff ξ ≅ twist
    EXPECT_EQ(fixed_points(r.torsor.base()).empty(), !find_equivariant_isom(xi, target).has_value());
  }
}

TEST(IsomObject, RejectsNonIsomorphicGSets) {
  const auto gg = z2_s3();
  EXPECT_THROW(isom_object(regular_object(gg), conjugation_object(gg)), precondition_error);
  EXPECT_THROW(isom_object(point_object(gg), point_object(gg, 2)), precondition_error);
}

TEST(TwistTorsor, Examples) {
  for (const auto& cs : corpus::cocycle_formula_cases())
    for (const auto& c : enumerate_cocycles(cs.gg)) {
      const auto p = torsor_from_cocycle(c);
      const auto trivial = torsor_from_cocycle(trivial_cocycle(cs.gg));

      auto self = twist_torsor(p, p);
      const auto inner = inner_form(c);
      std::size_t invariant = 0;
      for (element_t k = 0; k < inner.group().order(); ++k) {
        bool fixed = true;
        for (element_t s = 0; s < inner.gamma().order(); ++s) fixed = fixed && inner.act(s, k) == k;
        invariant += fixed;
      }
      EXPECT_EQ(fixed_points(self.base()).size(), invariant) << cs.name;

      auto from_trivial = twist_torsor(trivial, p);
      EXPECT_TRUE(find_torsor_isom(from_trivial.right_torsor(), p).has_value()) << cs.name;

      auto to_trivial = twist_torsor(p, trivial);
      EXPECT_TRUE(find_bitorsor_isom(to_trivial, inverse_torsor(bitorsor_from_cocycle(c))).has_value()) << cs.name;
    }
}

TEST(TwistTorsor, FixedPointsAreIsomorphisms) {
  const auto gg = z2_s3();
  for (const auto& a : enumerate_cocycles(gg))
    for (const auto& b : enumerate_cocycles(gg)) {
      auto t = twist_torsor(torsor_from_cocycle(a), torsor_from_cocycle(b));
      EXPECT_EQ(fixed_points(t.base()).empty(), !twisted_conjugate_equiv(a, b).has_value());
    }
}

TEST(H1Map, TwistingIsABijection) {
  for (const auto& cs : corpus::cocycle_formula_cases())
    for (const auto& c : enumerate_cocycles(cs.gg)) {
      auto base = h1(cs.gg);
      auto twisted = h1(inner_form(c));
      std::vector<Cocycle> reps;
      for (const auto& k : base.classes) reps.push_back(k.representative);
      std::vector<std::size_t> image;
      for (const auto& k : twisted.classes) image.push_back(class_of(reps, composite(k.representative, c)));
      // every member of a class lands in the same place
      for (std::size_t i = 0; i < twisted.cocycles.size(); ++i)
        EXPECT_EQ(class_of(reps, composite(twisted.cocycles[i], c)), image[twisted.class_of[i]]);
      auto sorted = image;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i) << cs.name;
      EXPECT_EQ(sorted.size(), reps.size());
      EXPECT_EQ(image[0], class_of(reps, c));
    }
}

TEST(H1Map, SignKernel) {
  const auto gg = z2_s3();
  auto ab = abelianization(gg);
  EXPECT_EQ(ab.group.group().order(), 2u);
  auto h = h1(gg);
  ASSERT_EQ(h.classes.size(), 2u);
  // the transposition class maps to the nontrivial sign class, so the kernel is the base point
  for (const auto& k : h.classes) {
    auto pushed = push_cocycle(k.representative, ab.projection, ab.group);
    EXPECT_EQ(twisted_conjugate_equiv(pushed, trivial_cocycle(ab.group)).has_value(), k.size == 1);
  }
}

TEST(SelfTwist, Examples) {
  auto run = [](const FiniteGroup& g) {
    const auto gg = GammaGroup::trivial(g, g);
    return self_twist_decomposition(cocycle_from_hom(gg, GroupHom::identity(g)));
  };
  auto z3 = run(catalog::cyclic(3));
  EXPECT_EQ(z3.components.size(), 3u);
  EXPECT_EQ(z3.fixed_count, 3u);
  for (const auto& comp : z3.components) EXPECT_EQ(comp.stabilizer.order(), 3u);

  auto s = run(s3());
  ASSERT_EQ(s.components.size(), 3u);
  EXPECT_EQ(s.components[0].stabilizer.order(), 6u);
  EXPECT_EQ(s.components[1].stabilizer.order(), 2u);
  EXPECT_EQ(s.components[2].stabilizer.order(), 3u);
  EXPECT_EQ(s.fixed_count, 1u);

  auto q = run(catalog::quaternion());
  EXPECT_EQ(q.components.size(), 5u);
  EXPECT_EQ(q.fixed_count, 2u);

  auto d = run(catalog::dihedral(4));
  EXPECT_EQ(d.components.size(), 5u);
  EXPECT_EQ(d.fixed_count, 2u);
}

TEST(SelfTwist, StabilizersAreCentralizers) {
  for (const auto& g : catalog::small_groups()) {
    const auto gg = GammaGroup::trivial(g, g);
    auto d = self_twist_decomposition(cocycle_from_hom(gg, GroupHom::identity(g)));
    auto sizes = oracle::class_sizes(g);
    ASSERT_EQ(d.components.size(), sizes.size()) << g.name();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      EXPECT_EQ(d.components[i].orbit.size(), sizes[i]);
      EXPECT_EQ(d.components[i].stabilizer.order(), oracle::centralizer_order(g, d.components[i].orbit.front()));
    }
    EXPECT_EQ(d.fixed_count, oracle::center_order(g));
  }
}
