#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torsor/twist.hpp"

namespace torsor {

/// A Galois cover seen through its monodromy: surjections u: Π → Γ and
/// φ: Π → G. Π̄ = ker u is the geometric part, Ḡ = φ(Π̄) the geometric
/// Galois group, v: G → G/Ḡ, and Λ: Γ → G/Ḡ the map with v∘φ = Λ∘u.
class CoverSpec {
 public:
  static CoverSpec make(GroupHom u, GroupHom phi) {
    if (!(u.source() == phi.source())) throw precondition_error("u and phi have different sources");
    if (!u.is_surjective()) throw precondition_error("u is not surjective");
    if (!phi.is_surjective()) throw precondition_error("phi is not surjective");
    CoverSpec c;
    c.pi_bar_ = std::make_shared<Subgroup>(u.kernel());
    c.g_bar_ = std::make_shared<Subgroup>(phi.image_of(*c.pi_bar_));
    c.scalar_ = std::make_shared<QuotientGroup>(quotient(phi.target(), *c.g_bar_));
    const auto& v = c.scalar_->projection;
    std::vector<element_t> lambda(u.target().order(), 0);
    for (element_t p = 0; p < u.source().order(); ++p) lambda[u(p)] = v(phi(p));
    for (element_t p = 0; p < u.source().order(); ++p)
      if (lambda[u(p)] != v(phi(p))) throw invariant_error("square does not commute at " + std::to_string(p));
    c.lambda_ = std::make_shared<GroupHom>(GroupHom::from_map(u.target(), c.scalar_->group, std::move(lambda)));
    c.u_ = std::make_shared<GroupHom>(std::move(u));
    c.phi_ = std::make_shared<GroupHom>(std::move(phi));
    return c;
  }

  const FiniteGroup& pi() const noexcept { return u_->source(); }
  const FiniteGroup& gamma() const noexcept { return u_->target(); }
  const FiniteGroup& group() const noexcept { return phi_->target(); }
  const GroupHom& u() const noexcept { return *u_; }
  const GroupHom& phi() const noexcept { return *phi_; }
  const Subgroup& pi_bar() const noexcept { return *pi_bar_; }
  const Subgroup& g_bar() const noexcept { return *g_bar_; }
  const FiniteGroup& scalar_group() const noexcept { return scalar_->group; }
  const GroupHom& v() const noexcept { return scalar_->projection; }
  const GroupHom& lambda() const noexcept { return *lambda_; }

  /// Γ acting trivially on G: cocycles are homomorphisms.
  GammaGroup gamma_group() const { return GammaGroup::trivial(gamma(), group()); }

 private:
  CoverSpec() = default;
  std::shared_ptr<const GroupHom> u_, phi_, lambda_;
  std::shared_ptr<const Subgroup> pi_bar_, g_bar_;
  std::shared_ptr<const QuotientGroup> scalar_;
};

/// Sections s: Γ → Π of u, in lexicographic order; with `up_to_conjugacy`
/// only the smallest member of each Π̄-conjugacy orbit is kept.
inline std::vector<GroupHom> sections(const CoverSpec& cover, bool up_to_conjugacy = false) {
  HomConstraints hc;
  hc.composed_with.emplace(cover.u(), GroupHom::identity(cover.gamma()));
  auto all = enumerate_homs(cover.gamma(), cover.pi(), hc);
  if (!up_to_conjugacy) return all;
  std::set<std::vector<element_t>> seen;
  std::vector<GroupHom> out;
  const auto& P = cover.pi();
  for (const auto& s : all) {
    if (seen.count(s.map())) continue;
    for (auto p : cover.pi_bar().members()) {
      std::vector<element_t> m;
      for (auto x : s.map()) m.push_back(P.conj(p, x));
      seen.insert(std::move(m));
    }
    out.push_back(s);  // all is sorted, so s is the smallest of its orbit
  }
  return out;
}

/// φ∘s as a cocycle for the trivial action of Γ on G.
inline Cocycle specialization(const CoverSpec& cover, const GroupHom& s) {
  return cocycle_from_hom(cover.gamma_group(), cover.phi().after(s));
}

/// Some w ∈ G/Ḡ with v∘ψ(γ) = w⁻¹·Λ(γ)·w for all γ, if any.
inline std::optional<element_t> star_witness(const CoverSpec& cover, const Cocycle& psi) {
  const auto scalar = GammaGroup::trivial(cover.gamma(), cover.scalar_group());
  std::vector<element_t> vpsi;
  for (auto x : psi.values()) vpsi.push_back(cover.v()(x));
  return twisted_conjugate_equiv(validate_cocycle(scalar, cover.lambda().map()),
                                 validate_cocycle(scalar, std::move(vpsi)));
}

inline bool star_condition(const CoverSpec& cover, const Cocycle& psi) { return star_witness(cover, psi).has_value(); }

/// Brute force: a section s with φ∘s conjugate to ψ in G.
inline std::optional<GroupHom> specialization_exists_oracle(const CoverSpec& cover, const Cocycle& psi) {
  const auto& G = cover.group();
  for (const auto& s : sections(cover)) {
    for (element_t g = 0; g < G.order(); ++g) {
      bool ok = true;
      for (element_t y = 0; y < cover.gamma().order() && ok; ++y) ok = G.conj(g, cover.phi()(s(y))) == psi(y);
      if (ok) return s;
    }
  }
  return std::nullopt;
}

/// The Π-set on the points of G with π⋆g = φ(π)·g·ψ(u(π))⁻¹.
inline GammaSet twisted_cover(const CoverSpec& cover, const Cocycle& psi) {
  const auto& G = cover.group();
  std::vector<element_t> t;
  for (element_t p = 0; p < cover.pi().order(); ++p)
    for (element_t g = 0; g < G.order(); ++g) t.push_back(G.mul(G.mul(cover.phi()(p), g), G.inv(psi(cover.u()(p)))));
  return GammaSet::from_table(cover.pi(), G.order(), std::move(t));
}

/// Pullback of a Π-set along a section s: Γ → Π.
inline GammaSet fiber_along(const GammaSet& pi_set, const GroupHom& s) {
  std::vector<element_t> t;
  for (element_t y = 0; y < s.source().order(); ++y)
    for (element_t x = 0; x < pi_set.size(); ++x) t.push_back(pi_set.act(s(y), x));
  return GammaSet::from_table(s.source(), pi_set.size(), std::move(t));
}

/// The first section whose fiber of the twisted cover has a Γ-fixed point.
inline std::optional<GroupHom> specialization_exists_twisted(const CoverSpec& cover, const Cocycle& psi) {
  const auto tc = twisted_cover(cover, psi);
  for (const auto& s : sections(cover))
    if (!fixed_points(fiber_along(tc, s)).empty()) return s;
  return std::nullopt;
}

struct DecompositionComponent {
  element_t center_element;  // z ∈ Z(G/Ḡ)
  std::vector<element_t> points;
  bool geometrically_connected;
  bool stable;  // closed under the Π-action
};

struct Decomposition {
  element_t star_witness;  // w with v∘ψ = w⁻¹Λw
  std::vector<DecompositionComponent> components;
  std::vector<element_t> remainder;  // points whose class is not central
};

/// Splits the twisted cover by g ↦ v(g)·w⁻¹ ∈ G/Ḡ. Π acts on these values by
/// conjugation through Λ∘u, so each central value gives a Π-stable piece.
inline Decomposition decomposition_components(const CoverSpec& cover, const Cocycle& psi) {
  const auto w = star_witness(cover, psi);
  if (!w) throw precondition_error("star condition fails: v o psi is not conjugate to the scalar extension map");
  const auto& Q = cover.scalar_group();
  const auto tc = twisted_cover(cover, psi);
  const auto z = center(Q);
  Decomposition out{*w, {}, {}};
  std::vector<Permutation> geometric;
  for (auto p : cover.pi_bar().members()) geometric.push_back(tc.row(p));
  const auto orbs = orbits_of(tc.size(), geometric);
  for (auto c : z.members()) {
    DecompositionComponent comp{c, {}, false, true};
    for (element_t g = 0; g < cover.group().order(); ++g)
      if (Q.mul(cover.v()(g), Q.inv(*w)) == c) comp.points.push_back(g);
    std::vector<bool> in(cover.group().order(), false);
    for (auto x : comp.points) in[x] = true;
    comp.geometrically_connected =
        std::any_of(orbs.begin(), orbs.end(), [&](const std::vector<element_t>& o) { return o == comp.points; });
    for (auto x : comp.points)
      for (element_t p = 0; p < cover.pi().order(); ++p) comp.stable = comp.stable && in[tc.act(p, x)];
    out.components.push_back(std::move(comp));
  }
  for (element_t g = 0; g < cover.group().order(); ++g)
    if (!z.contains(Q.mul(cover.v()(g), Q.inv(*w)))) out.remainder.push_back(g);
  return out;
}

/// Number of sections s with φ∘s conjugate to ψ. Requires the star condition.
inline std::size_t pac_census(const CoverSpec& cover, const Cocycle& psi) {
  if (!star_condition(cover, psi)) throw precondition_error("star condition fails: v o psi is not conjugate to the scalar extension map");
  std::size_t n = 0;
  for (const auto& s : sections(cover))
    if (twisted_conjugate_equiv(specialization(cover, s), psi)) ++n;
  return n;
}

/// Whether g ↦ φ(s(γ))·g·φ(t(γ))⁻¹ has a fixed point, i.e. whether the
/// specializations at s and t are isomorphic.
inline bool double_point_test(const CoverSpec& cover, const GroupHom& s, const GroupHom& t) {
  const auto& G = cover.group();
  for (element_t g = 0; g < G.order(); ++g) {
    bool fixed = true;
    for (auto y : cover.gamma().generators())
      fixed = fixed && G.mul(G.mul(cover.phi()(s(y)), g), G.inv(cover.phi()(t(y)))) == g;
    if (fixed) return true;
  }
  return false;
}

// ---- partial quotients ----

struct QuotientPartielResult {
  TwistReport report;
  std::size_t sections = 0;         // Γ-fixed automorphisms s of R checked
  std::vector<std::size_t> fibers;  // |fiber of Isom_G(P1, P2) over s| per s
};

/// For right G-torsors P1, P2 with isomorphic quotients by K, checks for every
/// Γ-fixed automorphism s of R = P1/K that (r, f) ↦ f restricted to the fiber
/// over r is a Γ-equivariant bijection from R × {f : f induces s} onto the
/// K-isomorphisms between fibers over r and s(r).
inline QuotientPartielResult quotient_partiel_check(const Torsor& p1, const Torsor& p2, const Subgroup& k) {
  if (!(p1.gamma_group() == p2.gamma_group())) throw precondition_error("torsors over different gamma-groups");
  const auto& gg = p1.gamma_group();
  const auto& gam = gg.gamma();
  const auto q = gamma_quotient(gg, k);
  const auto r1 = push_torsor_with_projection(p1, q.projection, q.group);
  const auto r2 = push_torsor_with_projection(p2, q.projection, q.group);
  const auto& R = r1.torsor;
  const auto alpha = find_torsor_isom(r2.torsor, R);  // R2 → R
  if (!alpha) throw precondition_error("no common quotient");
  auto rho1 = [&](element_t x) { return r1.projection[x]; };
  auto rho2 = [&](element_t y) { return (*alpha)[r2.projection[y]]; };

  QuotientPartielResult out;
  out.report.claim = "quotient.partial";
  const auto isom_g = twist_torsor(p1, p2);  // label y: 0 ↦ y
  const auto isom_r = twist_torsor(R, R);
  // the G-isomorphism labelled y as a point map
  auto g_map = [&](element_t y) {
    Permutation f(p1.size());
    for (element_t x = 0; x < p1.size(); ++x) f[x] = p2.right(y, p1.divide(0, x));
    return f;
  };
  // smallest point of each fiber of P1 → R
  std::vector<element_t> fiber_base(R.size(), static_cast<element_t>(-1));
  for (element_t x = p1.size(); x-- > 0;) fiber_base[rho1(x)] = x;

  for (auto sy : fixed_points(isom_r.base())) {
    ++out.sections;
    // s as a point map of R
    Permutation s(R.size());
    for (element_t r = 0; r < R.size(); ++r) s[r] = R.right(sy, R.divide(0, r));
    std::vector<element_t> fiber;
    for (element_t y = 0; y < isom_g.size(); ++y) {
      const auto f = g_map(y);
      bool induces = true;
      for (element_t x = 0; x < p1.size() && induces; ++x) induces = rho2(f[x]) == s[rho1(x)];
      if (induces) fiber.push_back(y);
    }
    out.fibers.push_back(fiber.size());
    // K-isomorphisms over R: pairs (r, y') with y' over s(r), meaning the map
    // fiber_base[r]·κ ↦ y'·κ for κ ∈ K. Encoded as r·|P2| + y'.
    std::vector<bool> is_k_iso(R.size() * p2.size(), false);
    std::size_t k_isos = 0;
    for (element_t r = 0; r < R.size(); ++r)
      for (element_t y = 0; y < p2.size(); ++y)
        if (rho2(y) == s[r]) {
          is_k_iso[r * p2.size() + y] = true;
          ++k_isos;
        }
    // β(r, f) = (r, f(fiber_base[r]))
    std::vector<bool> hit(R.size() * p2.size(), false);
    bool ok = fiber.size() * R.size() == k_isos;
    std::string detail;
    for (element_t r = 0; r < R.size() && ok; ++r)
      for (auto y : fiber) {
        const auto code = r * p2.size() + g_map(y)[fiber_base[r]];
        if (!is_k_iso[code] || hit[code]) {
          ok = false;
          detail = "beta not bijective at r=" + std::to_string(r);
          break;
        }
        hit[code] = true;
      }
    // Γ-equivariance: γ·(r, f) = (γr, γf) against γ acting on K-isomorphisms
    // by conjugation.
    for (element_t sg = 0; sg < gam.order() && ok; ++sg)
      for (element_t r = 0; r < R.size() && ok; ++r)
        for (auto y : fiber) {
          const auto gr = R.gamma_act(sg, r);
          const auto gy = isom_g.gamma_act(sg, y);
          const auto lhs = g_map(gy)[fiber_base[gr]];
          // conjugate the K-isomorphism at r: x ↦ γ(h(γ⁻¹x)) on the fiber over γr
          const auto back = p1.gamma_act(gam.inv(sg), fiber_base[gr]);
          const auto kappa = p1.divide(fiber_base[r], back);
          if (!k.contains(kappa)) {
            ok = false;
            detail = "fiber transport leaves K";
            break;
          }
          const auto rhs = p2.gamma_act(sg, p2.right(g_map(y)[fiber_base[r]], kappa));
          if (lhs != rhs) {
            ok = false;
            detail = "beta not gamma-equivariant at (gamma " + std::to_string(sg) + ", r=" + std::to_string(r) + ")";
            break;
          }
        }
    out.report.record(ok, "section=" + std::to_string(sy), detail);
  }
  return out;
}

// ---- non-Galois covers ----

struct NonGaloisResult {
  bool isomorphic_as_covers = false;  // some (η, s) passes, ν∘η conjugate to μ in Sₙ
  bool strict_isomorphic = false;     // same, restricted to ν∘η = μ exactly
  std::vector<std::pair<GroupHom, GroupHom>> witnesses;  // (η, s)
  std::size_t embeddings = 0;
  std::size_t strict_embeddings = 0;
};

/// Whether a = σ·b·σ⁻¹ pointwise for some σ in the common target.
inline bool conjugate_homs(const GroupHom& a, const GroupHom& b) {
  const auto& S = a.target();
  const auto& gens = a.source().generators();
  for (element_t sigma = 0; sigma < S.order(); ++sigma) {
    bool ok = true;
    for (std::size_t i = 0; i < gens.size() && ok; ++i) ok = a(gens[i]) == S.conj(sigma, b(gens[i]));
    if (ok) return true;
  }
  return false;
}

struct ImageSplit {
  Subgroup image;  // H inside Sₙ
  GroupHom psi;    // Γ ↠ H
  GroupHom mu;     // H ↪ Sₙ
};

/// Writes ψ': Γ → Sₙ as μ∘ψ with ψ onto its image H.
inline ImageSplit split_image(const GroupHom& psi_prime) {
  auto img = psi_prime.image();
  auto mu = GroupHom::inclusion(img);
  std::vector<element_t> pos(psi_prime.target().order(), 0);
  for (std::size_t i = 0; i < img.members().size(); ++i) pos[img.members()[i]] = static_cast<element_t>(i);
  std::vector<element_t> m;
  for (auto x : psi_prime.map()) m.push_back(pos[x]);
  auto psi = GroupHom::from_map(psi_prime.source(), mu.source(), std::move(m));
  return {std::move(img), std::move(psi), std::move(mu)};
}

/// Direct check: some section s with ν∘φ∘s conjugate in Sₙ to ψ'.
inline bool nongalois_oracle(const CoverSpec& cover, const GroupHom& nu, const GroupHom& psi_prime) {
  for (const auto& s : sections(cover))
    if (conjugate_homs(nu.after(cover.phi().after(s)), psi_prime)) return true;
  return false;
}

/// Twisting test for a degree-n cover ν∘φ against the étale algebra of ψ'.
/// For each embedding η: H ↪ G (H the image of ψ') with ν∘η conjugate to μ,
/// P' = (torsor of ψ) ∧^H G along η and each section's fiber of the twisted
/// cover for P' is searched for a fixed point.
inline NonGaloisResult nongalois_test(const CoverSpec& cover, const GroupHom& nu, const GroupHom& psi_prime) {
  if (!(nu.source() == cover.group())) throw precondition_error("nu does not start at the cover group");
  if (!nu.is_injective()) throw precondition_error("nu is not injective");
  if (!(psi_prime.target() == nu.target())) throw precondition_error("psi and nu land in different groups");
  if (!(psi_prime.source() == cover.gamma())) throw precondition_error("psi does not start at gamma");
  const auto split = split_image(psi_prime);
  if (!split.mu.is_injective()) throw precondition_error("mu is not injective");
  const auto& H = split.mu.source();
  const auto h_torsor = torsor_from_cocycle(cocycle_from_hom(GammaGroup::trivial(cover.gamma(), H), split.psi));
  const auto gg = cover.gamma_group();
  const auto secs = sections(cover);

  NonGaloisResult out;
  HomConstraints inj;
  inj.injective = true;
  for (const auto& eta : enumerate_homs(H, cover.group(), inj)) {
    const auto nu_eta = nu.after(eta);
    if (!conjugate_homs(nu_eta, split.mu)) continue;
    const bool strict = nu_eta == split.mu;
    ++out.embeddings;
    if (strict) ++out.strict_embeddings;
    const auto p_prime = push_torsor(h_torsor, eta, gg);
    const auto tc = twisted_cover(cover, cocycle_from_torsor(p_prime, 0));
    for (const auto& s : secs) {
      if (fixed_points(fiber_along(tc, s)).empty()) continue;
      out.isomorphic_as_covers = true;
      out.strict_isomorphic = out.strict_isomorphic || strict;
      out.witnesses.emplace_back(eta, s);
    }
  }
  return out;
}

struct EmbeddingFamilyResult {
  bool fiber_matches = false;       // some s with ker(φ∘s) = ker ψ
  bool some_twist_has_point = false;  // some j with a fixed point on the twisted cover
  bool some_component_has_point = false;  // some j, z with a fixed point in component z
  std::size_t family_size = 0;      // |J|
};

/// Embeddings j: H ↪ G with v∘j onto G/Ḡ, one per G-conjugacy orbit
/// (the smallest value table).
inline std::vector<GroupHom> embedding_family(const CoverSpec& cover, const FiniteGroup& h) {
  HomConstraints inj;
  inj.injective = true;
  std::set<std::vector<element_t>> seen;
  std::vector<GroupHom> out;
  const auto& G = cover.group();
  for (const auto& j : enumerate_homs(h, G, inj)) {
    if (!cover.v().after(j).is_surjective() || seen.count(j.map())) continue;
    for (element_t g = 0; g < G.order(); ++g) {
      std::vector<element_t> m;
      for (auto x : j.map()) m.push_back(G.conj(g, x));
      seen.insert(std::move(m));
    }
    out.push_back(j);
  }
  return out;
}

/// The three equivalent ways of asking whether some fiber of the cover is a
/// disjoint union of copies of the Galois algebra of ψ: Γ ↠ H.
inline EmbeddingFamilyResult embedding_family_test(const CoverSpec& cover, const GroupHom& psi) {
  EmbeddingFamilyResult out;
  const auto ker = psi.kernel();
  const auto secs = sections(cover);
  for (const auto& s : secs)
    if (cover.phi().after(s).kernel() == ker) out.fiber_matches = true;
  const auto family = embedding_family(cover, psi.target());
  out.family_size = family.size();
  for (const auto& j : family) {
    const auto c = cocycle_from_hom(cover.gamma_group(), j.after(psi));
    if (specialization_exists_twisted(cover, c)) out.some_twist_has_point = true;
    if (!star_condition(cover, c)) continue;
    const auto tc = twisted_cover(cover, c);
    const auto dec = decomposition_components(cover, c);
    for (const auto& comp : dec.components)
      for (const auto& s : secs) {
        const auto fib = fiber_along(tc, s);
        for (auto x : fixed_points(fib))
          if (std::binary_search(comp.points.begin(), comp.points.end(), x)) out.some_component_has_point = true;
      }
  }
  return out;
}

}  // namespace torsor
