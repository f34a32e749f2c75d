#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "torsor/corpus.hpp"

using namespace torsor;

namespace {

const FiniteGroup& s3() {
  static const auto g = catalog::symmetric(3);
  return g;
}

GroupHom sign() {
  HomConstraints hc;
  hc.surjective = true;
  return enumerate_homs(s3(), catalog::cyclic(2), hc).front();
}

CoverSpec s3_cover() { return CoverSpec::make(sign(), GroupHom::identity(s3())); }

Cocycle hom_cocycle(const CoverSpec& c, std::vector<element_t> values) {
  return validate_cocycle(c.gamma_group(), std::move(values));
}

// Sections by trying every map Γ → Π.
std::size_t brute_sections(const CoverSpec& c) {
  std::size_t n = 0;
  for (const auto& m : oracle::homs(c.gamma(), c.pi())) {
    bool ok = true;
    for (element_t y = 0; y < c.gamma().order(); ++y) ok = ok && c.u()(m[y]) == y;
    n += ok;
  }
  return n;
}

}  // namespace

TEST(Cover, SectionExamples) {
  const auto cover = s3_cover();
  EXPECT_EQ(cover.pi_bar().order(), 3u);
  EXPECT_EQ(cover.g_bar().order(), 3u);
  EXPECT_EQ(cover.scalar_group().order(), 2u);
  EXPECT_EQ(sections(cover).size(), 3u);
  EXPECT_EQ(sections(cover, true).size(), 1u);

  HomConstraints hc;
  hc.surjective = true;
  const auto z4 = catalog::cyclic(4);
  const auto mod2 = enumerate_homs(z4, catalog::cyclic(2), hc).front();
  EXPECT_TRUE(sections(CoverSpec::make(mod2, GroupHom::identity(z4))).empty());

  const auto z2s3 = catalog::direct_product(catalog::cyclic(2), s3());
  std::vector<element_t> proj;
  for (element_t x = 0; x < z2s3.order(); ++x) proj.push_back(x / 6);
  const auto p = GroupHom::from_map(z2s3, catalog::cyclic(2), proj);
  const auto direct = CoverSpec::make(p, GroupHom::identity(z2s3));
  auto secs = sections(direct);
  EXPECT_GE(secs.size(), 1u);
  // γ ↦ (γ, e) is among them
  EXPECT_TRUE(std::any_of(secs.begin(), secs.end(), [](const GroupHom& s) { return s(1) == 6; }));
}

TEST(Cover, SectionsMatchBruteForce) {
  for (const auto& nc : corpus::covers()) {
    if (std::pow(double(nc.cover.pi().order()), double(nc.cover.gamma().order())) > 3e5) continue;
    EXPECT_EQ(sections(nc.cover).size(), brute_sections(nc.cover)) << nc.name;
  }
}

TEST(Cover, RejectsNonSurjectiveMaps) {
  const auto z2 = catalog::cyclic(2);
  EXPECT_THROW(CoverSpec::make(GroupHom::trivial(s3(), z2), GroupHom::identity(s3())), precondition_error);
  EXPECT_THROW(CoverSpec::make(sign(), GroupHom::trivial(s3(), s3())), precondition_error);
}

TEST(Cover, SpecializationExamples) {
  const auto cover = s3_cover();
  for (const auto& s : sections(cover)) {
    auto c = specialization(cover, s);
    EXPECT_EQ(centralizer(s3(), c(1)).order(), 2u);  // a transposition
  }
  const auto secs = sections(cover);
  for (const auto& a : secs)
    for (const auto& b : secs) EXPECT_TRUE(twisted_conjugate_equiv(specialization(cover, a), specialization(cover, b)));

  // φ factoring through u: the specialization does not depend on s
  const auto constant = CoverSpec::make(sign(), sign());
  for (const auto& s : sections(constant)) EXPECT_EQ(specialization(constant, s).values(), (std::vector<element_t>{0, 1}));
}

TEST(Cover, StarConditionExamples) {
  const auto cover = s3_cover();
  const auto t = *s3().find("(1 2)");
  EXPECT_TRUE(star_condition(cover, hom_cocycle(cover, {0, t})));
  EXPECT_FALSE(star_condition(cover, hom_cocycle(cover, {0, 0})));
  // Γ trivial makes Ḡ = G, so the quotient is trivial
  const auto full = CoverSpec::make(GroupHom::trivial(s3(), catalog::trivial()), GroupHom::identity(s3()));
  for (const auto& psi : enumerate_cocycles(full.gamma_group())) EXPECT_TRUE(star_condition(full, psi));
}

TEST(Cover, OracleExamples) {
  const auto cover = s3_cover();
  const auto t = *s3().find("(1 3)");
  EXPECT_TRUE(specialization_exists_oracle(cover, hom_cocycle(cover, {0, t})).has_value());
  EXPECT_FALSE(specialization_exists_oracle(cover, hom_cocycle(cover, {0, 0})).has_value());
  for (const auto& s : sections(cover)) EXPECT_TRUE(specialization_exists_oracle(cover, specialization(cover, s)));
}

TEST(Cover, TwistedCoverExamples) {
  for (const auto& nc : corpus::covers()) {
    const auto& cover = nc.cover;
    for (const auto& psi : enumerate_cocycles(cover.gamma_group())) {
      auto tc = twisted_cover(cover, psi);
      EXPECT_EQ(tc.size(), cover.group().order());
      for (const auto& s : sections(cover)) {
        // restricting along s gives Isom(torsor of ψ, torsor of φ∘s)
        auto fib = fiber_along(tc, s);
        auto iso = twist_torsor(torsor_from_cocycle(psi), torsor_from_cocycle(specialization(cover, s)));
        EXPECT_EQ(fib, iso.base()) << nc.name;
      }
    }
  }
}

TEST(Cover, TwistingLemmaAgreesWithOracle) {
  std::size_t pairs = 0;
  for (const auto& nc : corpus::covers())
    for (const auto& psi : enumerate_cocycles(nc.cover.gamma_group())) {
      ++pairs;
      EXPECT_EQ(specialization_exists_twisted(nc.cover, psi).has_value(),
                specialization_exists_oracle(nc.cover, psi).has_value())
          << nc.name << " " << corpus::cocycle_name(psi);
    }
  EXPECT_GE(pairs, 20u);
}

TEST(Cover, CohomologousTargetsGiveSameAnswer) {
  for (const auto& nc : corpus::covers()) {
    auto h = h1(nc.cover.gamma_group());
    for (std::size_t i = 0; i < h.cocycles.size(); ++i) {
      const auto& rep = h.classes[h.class_of[i]].representative;
      EXPECT_EQ(specialization_exists_twisted(nc.cover, h.cocycles[i]).has_value(),
                specialization_exists_twisted(nc.cover, rep).has_value())
          << nc.name;
    }
  }
}

TEST(Cover, DecompositionExamples) {
  const auto cover = s3_cover();
  auto d = decomposition_components(cover, hom_cocycle(cover, {0, *s3().find("(2 3)")}));
  ASSERT_EQ(d.components.size(), 2u);
  for (const auto& comp : d.components) {
    EXPECT_EQ(comp.points.size(), 3u);
    EXPECT_TRUE(comp.geometrically_connected);
    EXPECT_TRUE(comp.stable);
  }
  EXPECT_TRUE(d.remainder.empty());
  EXPECT_THROW(decomposition_components(cover, hom_cocycle(cover, {0, 0})), precondition_error);

  const auto full = CoverSpec::make(GroupHom::trivial(s3(), catalog::trivial()), GroupHom::identity(s3()));
  auto whole = decomposition_components(full, trivial_cocycle(full.gamma_group()));
  ASSERT_EQ(whole.components.size(), 1u);
  EXPECT_EQ(whole.components[0].points.size(), 6u);
}

TEST(Cover, DecompositionOverCorpus) {
  for (const auto& nc : corpus::covers())
    for (const auto& psi : enumerate_cocycles(nc.cover.gamma_group())) {
      if (!star_condition(nc.cover, psi)) continue;
      auto d = decomposition_components(nc.cover, psi);
      const auto& Q = nc.cover.scalar_group();
      EXPECT_EQ(d.components.size(), oracle::center_order(Q)) << nc.name;
      for (const auto& comp : d.components) {
        EXPECT_TRUE(comp.geometrically_connected) << nc.name;
        EXPECT_TRUE(comp.stable) << nc.name;
      }
      EXPECT_EQ(d.remainder.empty(), Q.is_abelian()) << nc.name;
    }
}

TEST(Cover, PacCensusExamples) {
  const auto cover = s3_cover();
  EXPECT_EQ(pac_census(cover, hom_cocycle(cover, {0, *s3().find("(1 2)")})), 3u);
  EXPECT_THROW(pac_census(cover, hom_cocycle(cover, {0, 0})), precondition_error);
  for (const auto& nc : corpus::covers())
    for (const auto& psi : enumerate_cocycles(nc.cover.gamma_group())) {
      if (!star_condition(nc.cover, psi)) continue;
      EXPECT_EQ(pac_census(nc.cover, psi) > 0, specialization_exists_oracle(nc.cover, psi).has_value()) << nc.name;
    }
}

TEST(Cover, DoublePointMatchesConjugacy) {
  for (const auto& nc : corpus::covers()) {
    const auto secs = sections(nc.cover);
    for (const auto& s : secs) {
      EXPECT_TRUE(double_point_test(nc.cover, s, s));
      for (const auto& t : secs)
        EXPECT_EQ(double_point_test(nc.cover, s, t),
                  twisted_conjugate_equiv(specialization(nc.cover, s), specialization(nc.cover, t)).has_value())
            << nc.name;
    }
  }
}

TEST(NonGalois, DegreeThreeExamples) {
  const auto cover = s3_cover();
  const auto nu = GroupHom::identity(s3());
  // Γ = Z2 onto a point stabilizer of S3: the algebra k × L for L quadratic
  const auto psi = GroupHom::from_map(catalog::cyclic(2), s3(), {0, *s3().find("(2 3)")});
  auto r = nongalois_test(cover, nu, psi);
  EXPECT_TRUE(r.isomorphic_as_covers);
  EXPECT_FALSE(r.witnesses.empty());
  EXPECT_TRUE(nongalois_oracle(cover, nu, psi));

  const auto trivial = GroupHom::trivial(catalog::cyclic(2), s3());
  auto r0 = nongalois_test(cover, nu, trivial);
  EXPECT_FALSE(r0.isomorphic_as_covers);
  EXPECT_FALSE(nongalois_oracle(cover, nu, trivial));
}

TEST(NonGalois, AgreesWithOracleOnCorpus) {
  std::size_t yes = 0, no = 0;
  for (const auto& nc : corpus::nongalois_cases())
    for (const auto& psi : enumerate_homs(nc.cover.gamma(), nc.nu.target())) {
      const bool expected = nongalois_oracle(nc.cover, nc.nu, psi);
      EXPECT_EQ(nongalois_test(nc.cover, nc.nu, psi).isomorphic_as_covers, expected) << nc.name;
      (expected ? yes : no)++;
    }
  EXPECT_GT(yes, 0u);
  EXPECT_GT(no, 0u);
}

TEST(NonGalois, LagrangeRulesOutLargeImages) {
  // G = Z3 inside S3 contains no subgroup of order 2
  for (const auto& nc : corpus::nongalois_cases()) {
    if (nc.name != "n3/Z6-to-Z2") continue;
    const auto psi = GroupHom::from_map(catalog::cyclic(2), s3(), {0, *s3().find("(2 3)")});
    auto r = nongalois_test(nc.cover, nc.nu, psi);
    EXPECT_EQ(r.embeddings, 0u);
    EXPECT_FALSE(r.isomorphic_as_covers);
    EXPECT_FALSE(nongalois_oracle(nc.cover, nc.nu, psi));
    return;
  }
  FAIL() << "corpus case missing";
}

TEST(EmbeddingFamily, ThreeViewsAgree) {
  for (const auto& nc : corpus::covers()) {
    for (const auto& psi : enumerate_homs(nc.cover.gamma(), nc.cover.group())) {
      const auto split = split_image(psi);
      auto r = embedding_family_test(nc.cover, split.psi);
      EXPECT_EQ(r.fiber_matches, r.some_twist_has_point) << nc.name;
      EXPECT_EQ(r.some_twist_has_point, r.some_component_has_point) << nc.name;
    }
  }
}
