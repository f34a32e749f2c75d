#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsor/gamma_set.hpp"

namespace torsor {

namespace detail {

inline void check_simply_transitive(const FiniteGroup& g, std::size_t n, const std::vector<element_t>& table,
                                    const char* side) {
  if (n != g.order())
    throw invariant_error(std::string(side) + " action cannot be simply transitive: " + std::to_string(n) +
                          " points, group of order " + std::to_string(g.order()));
  std::vector<bool> hit(n);
  for (element_t x = 0; x < n; ++x) {
    std::fill(hit.begin(), hit.end(), false);
    for (element_t h = 0; h < g.order(); ++h) {
      const auto y = table[h * n + x];
      if (hit[y])
        throw invariant_error(std::string(side) + " action not free at point " + std::to_string(x));
      hit[y] = true;
    }
  }
}

// table[h*n + x] = x·h must satisfy (x·g)·h = x·(gh).
inline void check_right_action(const FiniteGroup& g, std::size_t n, const std::vector<element_t>& table) {
  for (element_t x = 0; x < n; ++x)
    if (table[x] != x) throw invariant_error("right identity moves point " + std::to_string(x));
  for (element_t a = 0; a < g.order(); ++a)
    for (element_t b = 0; b < g.order(); ++b)
      for (element_t x = 0; x < n; ++x)
        if (table[b * n + table[a * n + x]] != table[g.mul(a, b) * n + x])
          throw invariant_error("not a right action at (" + std::to_string(a) + ", " + std::to_string(b) +
                                ", point " + std::to_string(x) + ")");
}

inline void check_equivariant(const GammaSet& base, const GammaGroup& gg, const std::vector<element_t>& table,
                              const char* side) {
  const auto n = base.size();
  for (element_t s = 0; s < gg.gamma().order(); ++s)
    for (element_t g = 0; g < gg.group().order(); ++g)
      for (element_t x = 0; x < n; ++x)
        if (base.act(s, table[g * n + x]) != table[gg.act(s, g) * n + base.act(s, x)])
          throw invariant_error(std::string(side) + " action not gamma-equivariant at (gamma " + std::to_string(s) +
                                ", g " + std::to_string(g) + ", point " + std::to_string(x) + ")");
}

}  // namespace detail

/// Right G-torsor with a compatible Γ-action: γ·(x·g) = (γ·x)·(γ⋆g).
class Torsor {
 public:
  Torsor() = default;

  /// `right[g*n + x]` is x·g.
  static Torsor make(GammaSet base, GammaGroup gg, std::vector<element_t> right) {
    if (!(base.gamma() == gg.gamma())) throw invariant_error("torsor uses two different gammas");
    const auto n = base.size();
    if (right.size() != n * gg.group().order()) throw invariant_error("right action table has wrong size");
    detail::check_right_action(gg.group(), n, right);
    detail::check_simply_transitive(gg.group(), n, right, "right");
    detail::check_equivariant(base, gg, right, "right");
    return Torsor(std::move(base), std::move(gg), std::move(right));
  }

  const GammaSet& base() const noexcept { return base_; }
  const GammaGroup& gamma_group() const noexcept { return gg_; }
  std::size_t size() const noexcept { return base_.size(); }
  element_t gamma_act(element_t s, element_t x) const noexcept { return base_.act(s, x); }
  /// x·g
  element_t right(element_t x, element_t g) const noexcept { return right_[g * size() + x]; }
  const std::vector<element_t>& right_table() const noexcept { return right_; }

  /// The unique g with x·g = y.
  element_t divide(element_t x, element_t y) const {
    for (element_t g = 0; g < gg_.group().order(); ++g)
      if (right(x, g) == y) return g;
    throw invariant_error("torsor action is not transitive");
  }

  /// The same data as a left action of the opposite group.
  GObject as_gobject() const { return trusted_gobject(base_, gg_.opposite(), right_); }

 private:
  friend class Bitorsor;
  friend Torsor trusted_torsor(GammaSet, GammaGroup, std::vector<element_t>);
  Torsor(GammaSet base, GammaGroup gg, std::vector<element_t> right)
      : base_(std::move(base)), gg_(std::move(gg)), right_(std::move(right)) {}

  GammaSet base_;
  GammaGroup gg_;
  std::vector<element_t> right_;
};

inline Torsor trusted_torsor(GammaSet base, GammaGroup gg, std::vector<element_t> right) {
  return Torsor(std::move(base), std::move(gg), std::move(right));
}

/// Left H-torsor and right G-torsor at once, with commuting actions.
class Bitorsor {
 public:
  Bitorsor() = default;

  static Bitorsor make(GammaSet base, GammaGroup left_group, GammaGroup right_group, std::vector<element_t> left,
                       std::vector<element_t> right) {
    auto rt = Torsor::make(base, right_group, std::move(right));
    const auto n = base.size();
    if (!(base.gamma() == left_group.gamma())) throw invariant_error("bitorsor uses two different gammas");
    GammaSet::check_action(left_group.group(), n, left, "left");
    detail::check_simply_transitive(left_group.group(), n, left, "left");
    detail::check_equivariant(base, left_group, left, "left");
    for (element_t h = 0; h < left_group.group().order(); ++h)
      for (element_t g = 0; g < right_group.group().order(); ++g)
        for (element_t x = 0; x < n; ++x)
          if (left[h * n + rt.right(x, g)] != rt.right(left[h * n + x], g))
            throw invariant_error("left and right actions do not commute at (" + std::to_string(h) + ", " +
                                  std::to_string(g) + ", point " + std::to_string(x) + ")");
    return Bitorsor(std::move(rt), std::move(left_group), std::move(left));
  }

  const Torsor& right_torsor() const noexcept { return right_; }
  const GammaSet& base() const noexcept { return right_.base(); }
  const GammaGroup& left_group() const noexcept { return left_group_; }
  const GammaGroup& right_group() const noexcept { return right_.gamma_group(); }
  std::size_t size() const noexcept { return right_.size(); }
  element_t gamma_act(element_t s, element_t x) const noexcept { return right_.gamma_act(s, x); }
  element_t right(element_t x, element_t g) const noexcept { return right_.right(x, g); }
  /// h·x
  element_t left(element_t h, element_t x) const noexcept { return left_[h * size() + x]; }
  const std::vector<element_t>& left_table() const noexcept { return left_; }
  const std::vector<element_t>& right_table() const noexcept { return right_.right_table(); }

  /// The unique h with h·x = y.
  element_t left_divide(element_t x, element_t y) const {
    for (element_t h = 0; h < left_group_.group().order(); ++h)
      if (left(h, x) == y) return h;
    throw invariant_error("left action is not transitive");
  }

 private:
  friend Bitorsor trusted_bitorsor(Torsor, GammaGroup, std::vector<element_t>);
  Bitorsor(Torsor right, GammaGroup left_group, std::vector<element_t> left)
      : right_(std::move(right)), left_group_(std::move(left_group)), left_(std::move(left)) {}

  Torsor right_;
  GammaGroup left_group_;
  std::vector<element_t> left_;
};

inline Bitorsor trusted_bitorsor(Torsor right, GammaGroup left_group, std::vector<element_t> left) {
  return Bitorsor(std::move(right), std::move(left_group), std::move(left));
}

/// Points G, x·g = xg, γ·x = c(γ)·(γ⋆x).
inline Torsor torsor_from_cocycle(const Cocycle& c) {
  const auto& gg = c.gamma_group();
  const auto& G = gg.group();
  const auto n = G.order();
  std::vector<element_t> gam, right;
  for (element_t s = 0; s < gg.gamma().order(); ++s)
    for (element_t x = 0; x < n; ++x) gam.push_back(G.mul(c(s), gg.act(s, x)));
  for (element_t g = 0; g < n; ++g)
    for (element_t x = 0; x < n; ++x) right.push_back(G.mul(x, g));
  return trusted_torsor(GammaSet::from_table(gg.gamma(), n, std::move(gam)), gg, std::move(right));
}

/// torsor_from_cocycle(c) as an (inner_form(c), G)-bitorsor; inner_form(c)
/// acts by left multiplication.
inline Bitorsor bitorsor_from_cocycle(const Cocycle& c) {
  auto t = torsor_from_cocycle(c);
  const auto& G = c.gamma_group().group();
  std::vector<element_t> left;
  for (element_t h = 0; h < G.order(); ++h)
    for (element_t x = 0; x < G.order(); ++x) left.push_back(G.mul(h, x));
  return trusted_bitorsor(std::move(t), inner_form(c), std::move(left));
}

/// G itself as a (G, G)-bitorsor, Γ acting through ⋆.
inline Bitorsor trivial_bitorsor(const GammaGroup& gg) { return bitorsor_from_cocycle(trivial_cocycle(gg)); }

/// c(γ) = the unique g with basepoint·g = γ·basepoint.
inline Cocycle cocycle_from_torsor(const Torsor& p, element_t basepoint = 0) {
  std::vector<element_t> c;
  for (element_t s = 0; s < p.gamma_group().gamma().order(); ++s)
    c.push_back(p.divide(basepoint, p.gamma_act(s, basepoint)));
  return trusted_cocycle(p.gamma_group(), std::move(c));
}

/// Right cocycle of a bitorsor at p: γ·p = p·r(γ).
inline Cocycle right_cocycle(const Bitorsor& b, element_t p) { return cocycle_from_torsor(b.right_torsor(), p); }

/// Left cocycle at p: γ·p = a(γ)·p. Satisfies a(γδ) = (γ⋆a(δ))·a(γ).
inline std::vector<element_t> left_cocycle(const Bitorsor& b, element_t p) {
  std::vector<element_t> a;
  for (element_t s = 0; s < b.left_group().gamma().order(); ++s) a.push_back(b.left_divide(p, b.gamma_act(s, p)));
  return a;
}

/// u: right group → left group with p·g = u(g)·p (a group isomorphism).
inline std::vector<element_t> identification(const Bitorsor& b, element_t p) {
  std::vector<element_t> u;
  for (element_t g = 0; g < b.right_group().group().order(); ++g) u.push_back(b.left_divide(p, b.right(p, g)));
  return u;
}

/// Orbits of H on A × B under (x·h, z) ~ (x, h·z); pair (x, z) is x·|B| + z.
/// Classes are numbered by their smallest pair.
struct Contraction {
  std::vector<element_t> class_of;
  std::vector<std::pair<element_t, element_t>> representative;
  std::size_t nb{};

  element_t operator()(element_t x, element_t z) const { return class_of[x * nb + z]; }
};

template <class RightA, class LeftB>
Contraction contract(std::size_t na, std::size_t nb, const FiniteGroup& h, RightA right_a, LeftB left_b) {
  constexpr auto unset = static_cast<element_t>(-1);
  Contraction out;
  out.nb = nb;
  out.class_of.assign(na * nb, unset);
  for (element_t x = 0; x < na; ++x)
    for (element_t z = 0; z < nb; ++z) {
      if (out.class_of[x * nb + z] != unset) continue;
      const auto id = static_cast<element_t>(out.representative.size());
      out.representative.emplace_back(x, z);
      for (element_t k = 0; k < h.order(); ++k) {
        // (x·k, k⁻¹·z) ~ (x, z)
        const auto idx = right_a(x, k) * nb + left_b(h.inv(k), z);
        if (out.class_of[idx] != unset && out.class_of[idx] != id)
          throw invariant_error("contraction classes overlap");
        out.class_of[idx] = id;
      }
    }
  return out;
}

/// P ∧^H Q for P an (G, H)-bitorsor and Q an (H, K)-bitorsor, built as the
/// quotient set of P × Q.
inline Bitorsor contracted_product(const Bitorsor& p, const Bitorsor& q) {
  if (!(p.right_group() == q.left_group())) throw precondition_error("contracted product: group mismatch");
  const auto& H = p.right_group().group();
  auto cls = contract(p.size(), q.size(), H, [&](element_t x, element_t h) { return p.right(x, h); },
                      [&](element_t h, element_t z) { return q.left(h, z); });
  const auto n = cls.representative.size();
  const auto& gam = p.right_group().gamma();
  std::vector<element_t> gt, lt, rt;
  for (element_t s = 0; s < gam.order(); ++s)
    for (auto [x, z] : cls.representative) gt.push_back(cls(p.gamma_act(s, x), q.gamma_act(s, z)));
  for (element_t g = 0; g < p.left_group().group().order(); ++g)
    for (auto [x, z] : cls.representative) lt.push_back(cls(p.left(g, x), z));
  for (element_t k = 0; k < q.right_group().group().order(); ++k)
    for (auto [x, z] : cls.representative) rt.push_back(cls(x, q.right(z, k)));
  return Bitorsor::make(GammaSet::from_table(gam, n, std::move(gt)), p.left_group(), q.right_group(), std::move(lt),
                        std::move(rt));
}

/// P⁰ on the points of P: g⋆y = y·g⁻¹ and y⋆h = h⁻¹·y.
inline Bitorsor inverse_torsor(const Bitorsor& p) {
  const auto n = p.size();
  const auto& G = p.right_group().group();
  const auto& H = p.left_group().group();
  std::vector<element_t> lt, rt;
  for (element_t g = 0; g < G.order(); ++g)
    for (element_t y = 0; y < n; ++y) lt.push_back(p.right(y, G.inv(g)));
  for (element_t h = 0; h < H.order(); ++h)
    for (element_t y = 0; y < n; ++y) rt.push_back(p.left(H.inv(h), y));
  return Bitorsor::make(p.base(), p.right_group(), p.left_group(), std::move(lt), std::move(rt));
}

struct PushedTorsor {
  Torsor torsor;
  std::vector<element_t> projection;  // x ↦ class of (x, e)
};

/// P ∧^G G' along a Γ-equivariant f: G → G', as the quotient of P × G',
/// with the map P → P ∧^G G'.
inline PushedTorsor push_torsor_with_projection(const Torsor& p, const GroupHom& f, const GammaGroup& target) {
  if (auto w = equivariance_failure(f, p.gamma_group(), target))
    throw precondition_error("push_torsor: homomorphism is not gamma-equivariant");
  const auto& G = p.gamma_group().group();
  const auto& T = target.group();
  auto cls = contract(p.size(), T.order(), G, [&](element_t x, element_t g) { return p.right(x, g); },
                      [&](element_t g, element_t z) { return T.mul(f(g), z); });
  const auto n = cls.representative.size();
  std::vector<element_t> gt, rt, proj;
  for (element_t s = 0; s < target.gamma().order(); ++s)
    for (auto [x, z] : cls.representative) gt.push_back(cls(p.gamma_act(s, x), target.act(s, z)));
  for (element_t k = 0; k < T.order(); ++k)
    for (auto [x, z] : cls.representative) rt.push_back(cls(x, T.mul(z, k)));
  for (element_t x = 0; x < p.size(); ++x) proj.push_back(cls(x, 0));
  return {Torsor::make(GammaSet::from_table(target.gamma(), n, std::move(gt)), target, std::move(rt)),
          std::move(proj)};
}

inline Torsor push_torsor(const Torsor& p, const GroupHom& f, const GammaGroup& target) {
  return push_torsor_with_projection(p, f, target).torsor;
}

/// A Γ- and G-equivariant bijection, if the torsors are isomorphic.
inline std::optional<Permutation> find_torsor_isom(const Torsor& a, const Torsor& b) {
  if (!(a.gamma_group() == b.gamma_group())) throw precondition_error("torsors over different gamma-groups");
  return find_equivariant_isom(a.as_gobject(), b.as_gobject());
}

inline bool is_torsor_isom(const Torsor& a, const Torsor& b, const Permutation& f) {
  return is_equivariant(a.as_gobject(), b.as_gobject(), f);
}

/// Isomorphism of bitorsors: compatible with Γ and both group actions.
inline std::optional<Permutation> find_bitorsor_isom(const Bitorsor& a, const Bitorsor& b) {
  if (!(a.left_group() == b.left_group()) || !(a.right_group() == b.right_group()))
    throw precondition_error("bitorsors over different groups");
  if (a.size() != b.size()) return std::nullopt;
  auto perms = [](const Bitorsor& t) {
    std::vector<Permutation> out;
    const auto n = t.size();
    for (auto s : t.right_group().gamma().generators()) out.push_back(t.base().row(s));
    for (auto g : t.right_group().group().generators()) {
      Permutation r(n);
      for (element_t x = 0; x < n; ++x) r[x] = t.right(x, g);
      out.push_back(std::move(r));
    }
    for (auto h : t.left_group().group().generators()) {
      Permutation l(n);
      for (element_t x = 0; x < n; ++x) l[x] = t.left(h, x);
      out.push_back(std::move(l));
    }
    return out;
  };
  return detail::BijectionSearch(a.size(), perms(a), perms(b)).first();
}

}  // namespace torsor
