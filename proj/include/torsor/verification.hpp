#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "torsor/corpus.hpp"
#include "torsor/parallel.hpp"

namespace torsor::verify {

struct Options {
  std::size_t max_order = 8;  // corpus groups: |Γ| ≤ min(6, this), |G| ≤ min(8, this)
  std::size_t jobs = 1;
};

/// Reports for a fixed list of claim ids, filled by one worker.
class Claims {
 public:
  explicit Claims(const std::vector<std::string>& ids) {
    for (const auto& id : ids) reports_.push_back(TwistReport{id, 0, 0, {}});
  }

  TwistReport& operator[](const std::string& id) {
    for (auto& r : reports_)
      if (r.claim == id) return r;
    throw invariant_error("unknown claim " + id);
  }

  void merge(const Claims& other) {
    for (std::size_t i = 0; i < reports_.size(); ++i) reports_[i].merge(other.reports_[i]);
  }

  std::vector<TwistReport> take() { return std::move(reports_); }

 private:
  std::vector<TwistReport> reports_;
};

/// Runs `work(i, claims)` for each i on the worker pool and merges in index
/// order.
template <class Work>
std::vector<TwistReport> run_cases(const std::vector<std::string>& ids, std::size_t n, std::size_t jobs, Work work) {
  auto parts = parallel_map(n, jobs, [&](std::size_t i) {
    Claims c(ids);
    work(i, c);
    return c;
  });
  Claims total(ids);
  for (const auto& p : parts) total.merge(p);
  return total.take();
}

namespace detail {

/// First (γ, x) where two Γ-sets on the same points disagree.
inline std::string mismatch(const GammaSet& a, const GammaSet& b) {
  if (a.size() != b.size()) return "sizes " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  for (element_t s = 0; s < a.gamma().order(); ++s)
    for (element_t x = 0; x < a.size(); ++x)
      if (a.act(s, x) != b.act(s, x)) return "(gamma " + std::to_string(s) + ", point " + std::to_string(x) + ")";
  return {};
}

inline std::size_t aut_size_bound(const GObject& xi) {
  std::vector<Permutation> gens;
  for (auto g : xi.gamma_group().group().generators()) gens.push_back(xi.g_row(g));
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& o : orbits_of(xi.size(), gens)) ++by_size[o.size()];
  std::size_t bound = 1;
  for (auto [size, count] : by_size)
    for (std::size_t k = 1; k <= count; ++k) {
      bound *= k * size;
      if (bound > 1'000'000) return bound;
    }
  return bound;
}

inline Permutation inverse_map(const std::vector<element_t>& u) { return perm::inverse(u); }

}  // namespace detail

// ---- twisting: the four points of the twisting theorem ----

inline const std::vector<std::string>& twisting_claims() {
  static const std::vector<std::string> ids{"twist.isom-is-pushed-torsor", "twist.inverse-is-quasi-inverse",
                                            "twist.composition", "twist.reconstruction",
                                            "twist.matches-contraction"};
  return ids;
}

/// Objects with at most this many points are compared inside the category of
/// plain Γ-sets, whose automorphism group is the full symmetric group.
inline constexpr std::size_t kSymmetricCheckPoints = 5;
/// Objects whose G-automorphism group may exceed this are skipped for the
/// reconstruction check.
inline constexpr std::size_t kReconstructionAutCap = 128;

inline void twisting_case(const corpus::GammaGroupCase& cs, Claims& out) {
  const auto& gg = cs.gg;
  const auto cocycles = enumerate_cocycles(gg);
  std::vector<std::optional<SetAutomorphisms>> sym;
  for (const auto& o : cs.objects)
    sym.push_back(o.object.size() <= kSymmetricCheckPoints ? std::optional(set_automorphisms(o.object.base()))
                                                           : std::nullopt);

  for (const auto& c : cocycles) {
    const auto cname = cs.name + " c=" + corpus::cocycle_name(c);
    const auto bc = bitorsor_from_cocycle(c);
    const auto inv = inverse_torsor(bc);
    const auto undo = inverse_cocycle(c);
    const auto pc = torsor_from_cocycle(c);
    const auto c2s = enumerate_cocycles(inner_form(c));
    std::vector<Bitorsor> products;
    for (const auto& c2 : c2s) {
      products.push_back(contracted_product(bitorsor_from_cocycle(c2), bc));
      // the product cocycle at [e, e] is c2·c1
      const auto w = right_cocycle(products.back(), 0);
      bool ok = true;
      for (element_t s = 0; s < gg.gamma().order(); ++s) ok = ok && w(s) == gg.group().mul(c2(s), c(s));
      if (!ok) out["twist.composition"].record(false, cname + " c2=" + corpus::cocycle_name(c2), "product cocycle is not c2*c1");
    }

    for (std::size_t k = 0; k < cs.objects.size(); ++k) {
      const auto& [oname, xi] = cs.objects[k];
      const auto inst = cname + " obj=" + oname;
      const auto tw = twist(xi, c);

      if (sym[k]) {
        const auto& sa = *sym[k];
        const auto isom = isom_torsor(xi.base(), tw.base(), perm::identity(xi.size()), sa.perms, sa.gamma_group);
        const auto pushed = push_torsor(pc, action_hom(xi, sa.perms), sa.gamma_group);
        out["twist.isom-is-pushed-torsor"].record(find_torsor_isom(isom, pushed).has_value(), inst,
                                                  "no isomorphism Isom(xi, twist) -> P pushed to Aut(xi)");
      }

      out["twist.matches-contraction"].record(find_equivariant_isom(contract_object(bc, xi), tw).has_value(), inst,
                                              "contraction and twist differ");

      const bool back = find_equivariant_isom(contract_object(inv, tw), xi).has_value();
      const auto undone = twist(tw, undo);
      const auto diff = detail::mismatch(undone.base(), xi.base());
      out["twist.inverse-is-quasi-inverse"].record(
          back && diff.empty() && undone.gamma_group() == xi.gamma_group(), inst,
          !back ? "P0 contracted with the twist is not isomorphic to xi" : "twist by inverse cocycle differs at " + diff);

      for (std::size_t j = 0; j < c2s.size(); ++j) {
        const auto lhs = twist(tw, c2s[j]);
        const auto rhs = contract_object(products[j], xi);
        out["twist.composition"].record(find_equivariant_isom(lhs, rhs).has_value(),
                                        inst + " c2=" + corpus::cocycle_name(c2s[j]), "no isomorphism");
      }
    }
  }

  for (const auto& [oname, xi] : cs.objects) {
    if (detail::aut_size_bound(xi) > kReconstructionAutCap) continue;
    const auto aut = object_automorphisms(xi);
    const auto taut = tautological_object(xi, aut);
    for (const auto& a : enumerate_cocycles(aut.gamma_group)) {
      const auto inst = cs.name + " obj=" + oname + " aut-cocycle=" + corpus::cocycle_name(a);
      const auto target = GObject::make(twist(taut, a).base(), xi.gamma_group(), xi.gaction());
      std::string why;
      try {
        const auto r = isom_object(xi, target);
        if (!is_equivariant(r.twisted, target, r.witness))
          why = "witness is not equivariant";
        else if (!find_torsor_isom(r.torsor, torsor_from_cocycle(a)))
          why = "Isom(xi, xi') is not the torsor of the twisting cocycle";
      } catch (const invariant_error& e) {
        why = e.what();
      }
      out["twist.reconstruction"].record(why.empty(), inst, why);
    }
  }
}

// ---- cocycle formulas for contracted products and inverses ----

inline const std::vector<std::string>& cocycle_claims() {
  static const std::vector<std::string> ids{"cocycle.contracted-product", "cocycle.inverse",
                                            "cocycle.inverse-of-product", "cocycle.unit-and-involution",
                                            "cocycle.round-trip"};
  return ids;
}

/// The inverse formulas of a bitorsor at every point.
inline std::string inverse_formula_failure(const Bitorsor& p) {
  const auto p0 = inverse_torsor(p);
  const auto& L = p.left_group().group();
  const auto& R = p.right_group().group();
  for (element_t x = 0; x < p.size(); ++x) {
    const auto a = left_cocycle(p, x);
    const auto r = right_cocycle(p, x);
    const auto u = identification(p, x);
    const auto uinv = detail::inverse_map(u);
    const auto a0 = left_cocycle(p0, x);
    const auto r0 = right_cocycle(p0, x);
    const auto u0 = identification(p0, x);
    for (element_t s = 0; s < a.size(); ++s) {
      if (a0[s] != R.inv(r(s)) || a0[s] != uinv[L.inv(a[s])])
        return "left cocycle of P0 at (gamma " + std::to_string(s) + ", point " + std::to_string(x) + ")";
      if (r0(s) != L.inv(a[s]))
        return "right cocycle of P0 at (gamma " + std::to_string(s) + ", point " + std::to_string(x) + ")";
    }
    if (u0 != uinv) return "identification of P0 at point " + std::to_string(x);
  }
  return {};
}

/// The product formulas at every pair of points of P and Q.
inline std::string product_formula_failure(const Bitorsor& p, const Bitorsor& q, const Bitorsor& w) {
  const auto cls = contract(p.size(), q.size(), p.right_group().group(),
                            [&](element_t x, element_t h) { return p.right(x, h); },
                            [&](element_t h, element_t z) { return q.left(h, z); });
  const auto& L = p.left_group().group();
  const auto& K = q.right_group().group();
  for (element_t x = 0; x < p.size(); ++x) {
    const auto ap = left_cocycle(p, x);
    const auto rp = right_cocycle(p, x);
    const auto up = identification(p, x);
    for (element_t z = 0; z < q.size(); ++z) {
      const auto aq = left_cocycle(q, z);
      const auto rq = right_cocycle(q, z);
      const auto uq = identification(q, z);
      const auto uq_inv = detail::inverse_map(uq);
      const auto y = cls(x, z);
      const auto aw = left_cocycle(w, y);
      const auto rw = right_cocycle(w, y);
      const auto uw = identification(w, y);
      for (element_t s = 0; s < aw.size(); ++s) {
        const auto where = "(gamma " + std::to_string(s) + ", point [" + std::to_string(x) + "," + std::to_string(z) + "])";
        if (aw[s] != L.mul(ap[s], up[aq[s]])) return "left cocycle at " + where;
        if (rw(s) != K.mul(uq_inv[rp(s)], rq(s))) return "right cocycle at " + where;
      }
      for (element_t k = 0; k < uw.size(); ++k)
        if (uw[k] != up[uq[k]])
          return "identification at point [" + std::to_string(x) + "," + std::to_string(z) + "]";
    }
  }
  return {};
}

inline void cocycle_case(const corpus::GammaGroupCase& cs, Claims& out) {
  for (const auto& c1 : enumerate_cocycles(cs.gg)) {
    const auto inst = cs.name + " c1=" + corpus::cocycle_name(c1);
    const auto q = bitorsor_from_cocycle(c1);
    const auto q0 = inverse_torsor(q);

    const auto t = torsor_from_cocycle(c1);
    bool round = cocycle_from_torsor(t, 0).values() == c1.values();
    for (element_t b = 0; b < t.size() && round; ++b)
      round = find_torsor_isom(torsor_from_cocycle(cocycle_from_torsor(t, b)), t).has_value();
    out["cocycle.round-trip"].record(round, inst);

    const auto f = inverse_formula_failure(q);
    out["cocycle.inverse"].record(f.empty(), inst, f);
    const auto q00 = inverse_torsor(q0);
    const bool involution = q00.left_table() == q.left_table() && q00.right_torsor().right_table() == q.right_torsor().right_table() &&
                            q00.left_group() == q.left_group() && q00.right_group() == q.right_group();
    const bool unit = find_bitorsor_isom(contracted_product(q, q0), trivial_bitorsor(q.left_group())).has_value();
    out["cocycle.unit-and-involution"].record(involution && unit, inst,
                                              involution ? "P ^ P0 is not trivial" : "(P0)0 differs from P");

    for (const auto& c2 : enumerate_cocycles(inner_form(c1))) {
      const auto pinst = inst + " c2=" + corpus::cocycle_name(c2);
      const auto p = bitorsor_from_cocycle(c2);
      const auto w = contracted_product(p, q);
      const auto pf = product_formula_failure(p, q, w);
      out["cocycle.contracted-product"].record(pf.empty(), pinst, pf);
      const auto wf = inverse_formula_failure(w);
      out["cocycle.inverse"].record(wf.empty(), pinst, wf);
      const bool swap = find_bitorsor_isom(inverse_torsor(w), contracted_product(q0, inverse_torsor(p))).has_value();
      out["cocycle.inverse-of-product"].record(swap, pinst, "(P ^ Q)0 is not Q0 ^ P0");
    }
  }
}

// ---- H¹ against torsor isomorphism ----

inline const std::vector<std::string>& h1_claims() {
  static const std::vector<std::string> ids{"h1.classes-match-torsor-isomorphism", "h1.fixed-point-iff-trivial",
                                            "h1.class-sizes",
                                            "torsor.isom-is-contracted-product",
                                            "torsor.isom-fixed-point-iff-isomorphic",
                                            "torsor.inverse-is-isom-to-trivial"};
  return ids;
}

/// Pairs of cocycles beyond this count are sampled by taking the first
/// cocycles only, for the bitorsor-level checks.
inline constexpr std::size_t kPairwiseBitorsorLimit = 64;

inline void h1_case(const corpus::GammaGroupCase& cs, Claims& out) {
  const auto H = h1(cs.gg);
  const auto n = H.cocycles.size();
  std::size_t total = 0;
  for (const auto& cl : H.classes) total += cl.size;
  const bool trivial_first = H.classes.front().representative.values() == trivial_cocycle(cs.gg).values();
  out["h1.class-sizes"].record(total == n && trivial_first, cs.name, "sizes do not add up or trivial class not first");

  std::vector<Torsor> ts;
  for (const auto& c : H.cocycles) ts.push_back(torsor_from_cocycle(c));
  const auto trivial_torsor = torsor_from_cocycle(trivial_cocycle(cs.gg));
  for (std::size_t i = 0; i < n; ++i) {
    const auto inst = cs.name + " c=" + corpus::cocycle_name(H.cocycles[i]);
    const bool fixed = !fixed_points(ts[i].base()).empty();
    out["h1.fixed-point-iff-trivial"].record(fixed == (H.class_of[i] == 0), inst);
    for (std::size_t j = 0; j < n; ++j) {
      const bool same = H.class_of[i] == H.class_of[j];
      const bool iso = find_torsor_isom(ts[i], ts[j]).has_value();
      const bool conj = twisted_conjugate_equiv(H.cocycles[i], H.cocycles[j]).has_value();
      out["h1.classes-match-torsor-isomorphism"].record(
          same == iso && same == conj, inst + " vs " + corpus::cocycle_name(H.cocycles[j]),
          same ? "same class but torsors not isomorphic" : "different classes but torsors isomorphic");
    }
  }

  const auto m = std::min(n, kPairwiseBitorsorLimit);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = ts[i];
    const auto bp0 = inverse_torsor(bitorsor_from_torsor(p));
    const auto inst = cs.name + " p=" + corpus::cocycle_name(H.cocycles[i]);
    out["torsor.inverse-is-isom-to-trivial"].record(
        find_bitorsor_isom(twist_torsor(p, trivial_torsor), bp0).has_value(), inst);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& q = ts[j];
      const auto pinst = inst + " q=" + corpus::cocycle_name(H.cocycles[j]);
      const auto isom = twist_torsor(p, q);
      const auto prod = contracted_product(bitorsor_from_torsor(q), bp0);
      out["torsor.isom-is-contracted-product"].record(find_bitorsor_isom(isom, prod).has_value(), pinst);
      const bool fixed = !fixed_points(isom.base()).empty();
      out["torsor.isom-fixed-point-iff-isomorphic"].record(
          fixed == twisted_conjugate_equiv(H.cocycles[i], H.cocycles[j]).has_value(), pinst);
    }
  }
}

// ---- structural properties of twisting ----

inline const std::vector<std::string>& property_claims() {
  static const std::vector<std::string> ids{"twist.trivial-cocycle-is-identity", "twist.base-change",
                                            "twist.quotient",                    "twist.orbit-space",
                                            "twist.functoriality",               "twist.union-and-product",
                                            "torsor.contracted-product-associative"};
  return ids;
}

inline constexpr std::size_t kAssociativityFanout = 3;
/// Only the first automorphisms (in enumeration order) of each object are
/// used as test maps.
inline constexpr std::size_t kFunctorialityAutomorphisms = 24;

inline void property_case(const corpus::GammaGroupCase& cs, Claims& out) {
  const auto& gg = cs.gg;
  const auto cocycles = enumerate_cocycles(gg);
  const auto subgroups = all_subgroups(gg.gamma());
  std::vector<Subgroup> stable;
  for (const auto& k : all_subgroups(gg.group())) {
    if (!k.is_normal()) continue;
    bool ok = true;
    for (element_t s = 0; s < gg.gamma().order() && ok; ++s)
      for (auto x : k.members()) ok = ok && k.contains(gg.act(s, x));
    if (ok) stable.push_back(k);
  }

  for (const auto& [oname, xi] : cs.objects) {
    const auto tw = twist(xi, trivial_cocycle(gg));
    out["twist.trivial-cocycle-is-identity"].record(detail::mismatch(tw.base(), xi.base()).empty(),
                                                    cs.name + " obj=" + oname);
  }

  for (const auto& c : cocycles) {
    const auto cname = cs.name + " c=" + corpus::cocycle_name(c);
    for (const auto& [oname, xi] : cs.objects) {
      const auto inst = cname + " obj=" + oname;
      const auto tw = twist(xi, c);

      for (const auto& sub : subgroups) {
        const auto lhs = restrict(tw, sub);
        const auto rhs = twist(restrict(xi, sub), restrict_cocycle(c, sub));
        const auto d = detail::mismatch(lhs.base(), rhs.base());
        out["twist.base-change"].record(d.empty() && lhs.gaction() == rhs.gaction() && lhs.gamma_group() == rhs.gamma_group(),
                                        inst + " sub=" + std::to_string(sub.order()), d);
      }

      for (const auto& k : stable) {
        const auto q = gamma_quotient(gg, k);
        const auto kinst = inst + " K=" + std::to_string(k.order());
        // an object with G/K-structure, inflated back to G
        const auto down = orbit_space(xi, k, q);
        const auto inflated = pull_back(down, q.projection, gg);
        const auto d = detail::mismatch(twist(down, push_cocycle(c, q.projection, q.group)).base(),
                                        twist(inflated, c).base());
        out["twist.quotient"].record(d.empty(), kinst, d);
        // orbit space of the twist against twist of the orbit space
        const auto qi = gamma_quotient(inner_form(c), k);
        const auto d2 = detail::mismatch(orbit_space(tw, k, qi).base(),
                                         twist(down, push_cocycle(c, q.projection, q.group)).base());
        out["twist.orbit-space"].record(d2.empty(), kinst, d2);
      }

      // maps: automorphisms, the map to a point, inclusions into a union, and
      // the projection from a product
      std::vector<std::tuple<std::string, GObject, GObject, Permutation>> maps;
      const auto pt = point_object(gg);
      auto autos = equivariant_isoms(xi, xi);
      autos.resize(std::min(autos.size(), kFunctorialityAutomorphisms));
      for (const auto& f : autos) maps.emplace_back("automorphism", xi, xi, f);
      maps.emplace_back("to-point", xi, pt, Permutation(xi.size(), 0));
      const auto uni = disjoint_union(xi, pt);
      maps.emplace_back("into-union", xi, uni, perm::identity(xi.size()));
      const auto prod = product(xi, regular_object(gg));
      Permutation proj(prod.size());
      for (element_t x = 0; x < prod.size(); ++x) proj[x] = static_cast<element_t>(x / gg.group().order());
      maps.emplace_back("from-product", prod, xi, proj);
      for (const auto& [mname, a, b, f] : maps) {
        // the same point map between the twisted objects
        const auto ta = twist(a, c), tb = twist(b, c);
        bool ok = true;
        for (element_t s = 0; s < gg.gamma().order() && ok; ++s)
          for (element_t x = 0; x < a.size() && ok; ++x) ok = f[ta.gamma_act(s, x)] == tb.gamma_act(s, f[x]);
        for (element_t g = 0; g < gg.group().order() && ok; ++g)
          for (element_t x = 0; x < a.size() && ok; ++x) ok = f[ta.g_act(g, x)] == tb.g_act(g, f[x]);
        out["twist.functoriality"].record(ok, inst + " map=" + mname);
      }

      const auto other = regular_object(gg);
      const auto du = detail::mismatch(twist(disjoint_union(xi, other), c).base(),
                                       disjoint_union(tw, twist(other, c)).base());
      const auto dp = detail::mismatch(twist(product(xi, other), c).base(), product(tw, twist(other, c)).base());
      out["twist.union-and-product"].record(du.empty() && dp.empty(), inst, du.empty() ? dp : du);
    }
  }

  // (P ∧ Q) ∧ R against P ∧ (Q ∧ R)
  for (const auto& c1 : cocycles) {
    const auto b1 = bitorsor_from_cocycle(c1);
    auto c2s = enumerate_cocycles(inner_form(c1));
    c2s.resize(std::min(c2s.size(), kAssociativityFanout));
    for (const auto& c2 : c2s) {
      const auto b2 = bitorsor_from_cocycle(c2);
      auto c3s = enumerate_cocycles(inner_form(c2));
      c3s.resize(std::min(c3s.size(), kAssociativityFanout));
      for (const auto& c3 : c3s) {
        const auto b3 = bitorsor_from_cocycle(c3);
        const auto lhs = contracted_product(contracted_product(b3, b2), b1);
        const auto rhs = contracted_product(b3, contracted_product(b2, b1));
        out["torsor.contracted-product-associative"].record(
            find_bitorsor_isom(lhs, rhs).has_value(),
            cs.name + " c=" + corpus::cocycle_name(c1) + "," + corpus::cocycle_name(c2) + "," + corpus::cocycle_name(c3));
      }
    }
  }
}

// ---- the twisting bijection on H¹ and fibers of H¹(G) → H¹(G/[G,G]) ----

inline const std::vector<std::string>& h1_map_claims() {
  static const std::vector<std::string> ids{"h1.twisting-bijection", "h1.fiber-kernel"};
  return ids;
}

inline void h1_map_case(const corpus::GammaGroupCase& cs, Claims& out) {
  const auto& gg = cs.gg;
  const auto H = h1(gg);
  const auto ab = abelianization(gg);
  for (const auto& c : H.cocycles) {
    const auto inst = cs.name + " c=" + corpus::cocycle_name(c);
    const auto bc = bitorsor_from_cocycle(c);
    const auto Hi = h1(inner_form(c));
    // class(c') ↦ class(c' ∧ c), checked on every cocycle of the inner form
    std::vector<std::size_t> image(Hi.classes.size(), static_cast<std::size_t>(-1));
    std::string why;
    for (std::size_t i = 0; i < Hi.cocycles.size() && why.empty(); ++i) {
      const auto w = right_cocycle(contracted_product(bitorsor_from_cocycle(Hi.cocycles[i]), bc), 0);
      const auto k = H.class_index(w);
      auto& slot = image[Hi.class_of[i]];
      if (slot == static_cast<std::size_t>(-1))
        slot = k;
      else if (slot != k)
        why = "not well defined on class " + std::to_string(Hi.class_of[i]);
    }
    if (why.empty()) {
      auto sorted = image;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::size_t> all(H.classes.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      if (sorted != all) why = "not a bijection";
      else if (image[0] != H.class_index(c)) why = "trivial class does not go to the class of c";
    }
    out["h1.twisting-bijection"].record(why.empty(), inst, why);

    // ũ(q) ~ ũ(c) ⇔ ũ'(q ∧ c⁰) trivial
    const auto uc = push_cocycle(c, ab.projection, ab.group);
    const auto inner_uc = inner_form(uc);
    const auto c0 = inverse_torsor(bc);
    for (const auto& q : H.cocycles) {
      const auto lhs = twisted_conjugate_equiv(push_cocycle(q, ab.projection, ab.group), uc).has_value();
      const auto r = right_cocycle(contracted_product(bitorsor_from_cocycle(q), c0), 0);
      const auto pushed = push_cocycle(r, ab.projection, inner_uc);
      const auto rhs = twisted_conjugate_equiv(pushed, trivial_cocycle(inner_uc)).has_value();
      out["h1.fiber-kernel"].record(lhs == rhs, inst + " q=" + corpus::cocycle_name(q));
    }
  }
}

// ---- self-twist of a Galois extension ----

inline const std::vector<std::string>& selftwist_claims() {
  static const std::vector<std::string> ids{"selftwist.decomposition"};
  return ids;
}

inline void selftwist_group(const FiniteGroup& g, Claims& out) {
  const auto gg = GammaGroup::trivial(g, g);
  const auto d = self_twist_decomposition(validate_cocycle(gg, GroupHom::identity(g).map()));
  const auto classes = conjugacy_classes(g);
  std::vector<std::pair<std::size_t, std::vector<element_t>>> got, want;
  for (const auto& comp : d.components) got.emplace_back(comp.orbit.size(), comp.stabilizer.members());
  for (const auto& cl : classes)
    want.emplace_back(cl.members.size(), smallest_conjugate(centralizer(g, cl.representative)).members());
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  std::string why;
  if (d.components.size() != classes.size()) why = "component count differs from class count";
  else if (got != want) why = "stabilizers are not the centralizers";
  else if (d.fixed_count != center(g).order()) why = "fixed count differs from |Z(G)|";
  out["selftwist.decomposition"].record(why.empty(), g.name(), why);
}

// ---- specialization of covers ----

inline const std::vector<std::string>& specialization_claims() {
  static const std::vector<std::string> ids{
      "specialization.twisting-lemma",    "specialization.fiber-compatibility",
      "specialization.double-point",      "specialization.conjugate-sections",
      "specialization.star-invariance",   "specialization.pac-census",
      "specialization.embedding-family",  "quotient.partial"};
  return ids;
}

inline void specialization_cover(const corpus::NamedCover& nc, Claims& out) {
  const auto& cover = nc.cover;
  const auto& G = cover.group();
  const auto gg = cover.gamma_group();
  const auto secs = sections(cover);
  const auto cocycles = enumerate_cocycles(gg);

  for (std::size_t i = 0; i < secs.size(); ++i) {
    for (std::size_t j = 0; j < secs.size(); ++j) {
      const bool dp = double_point_test(cover, secs[i], secs[j]);
      const bool conj = twisted_conjugate_equiv(specialization(cover, secs[i]), specialization(cover, secs[j])).has_value();
      out["specialization.double-point"].record(dp == conj, nc.name + " s=" + std::to_string(i) + " t=" + std::to_string(j));
    }
    for (auto p : cover.pi_bar().members()) {
      std::vector<element_t> m;
      for (auto x : secs[i].map()) m.push_back(cover.pi().conj(p, x));
      const auto t = GroupHom::from_map(cover.gamma(), cover.pi(), std::move(m));
      out["specialization.conjugate-sections"].record(
          twisted_conjugate_equiv(specialization(cover, secs[i]), specialization(cover, t)).has_value(),
          nc.name + " s=" + std::to_string(i) + " by=" + std::to_string(p));
    }
  }

  for (const auto& psi : cocycles) {
    const auto inst = nc.name + " psi=" + corpus::cocycle_name(psi);
    const auto tw = specialization_exists_twisted(cover, psi);
    const auto orc = specialization_exists_oracle(cover, psi);
    bool agree = tw.has_value() == orc.has_value();
    if (agree && tw) agree = twisted_conjugate_equiv(specialization(cover, *tw), psi).has_value();
    out["specialization.twisting-lemma"].record(agree, inst, tw ? "twisted test found a section, oracle did not"
                                                                : "oracle found a section, twisted test did not");

    const auto tc = twisted_cover(cover, psi);
    const auto tp = torsor_from_cocycle(psi);
    for (std::size_t i = 0; i < secs.size(); ++i) {
      const auto expected = twist_torsor(tp, torsor_from_cocycle(specialization(cover, secs[i])));
      const auto d = detail::mismatch(fiber_along(tc, secs[i]), expected.base());
      out["specialization.fiber-compatibility"].record(d.empty(), inst + " s=" + std::to_string(i), d);
    }

    const bool star = star_condition(cover, psi);
    bool invariant = true;
    for (element_t g = 0; g < G.order(); ++g) invariant = invariant && star_condition(cover, twisted_conjugate(psi, g)) == star;
    out["specialization.star-invariance"].record(invariant, inst);

    if (star) {
      std::size_t direct = 0;
      for (const auto& s : secs) {
        bool hit = false;
        for (element_t g = 0; g < G.order() && !hit; ++g) {
          bool all = true;
          for (element_t y = 0; y < cover.gamma().order() && all; ++y)
            all = G.conj(g, cover.phi()(s(y))) == psi(y);
          hit = all;
        }
        if (hit) ++direct;
      }
      const auto n = pac_census(cover, psi);
      bool point_in_component = false;
      for (const auto& comp : decomposition_components(cover, psi).components)
        for (const auto& s : secs)
          for (auto x : fixed_points(fiber_along(tc, s)))
            point_in_component = point_in_component || std::binary_search(comp.points.begin(), comp.points.end(), x);
      out["specialization.pac-census"].record(n == direct && (n > 0) == point_in_component, inst,
                                              "census " + std::to_string(n) + " direct " + std::to_string(direct));
    }

    // embedding family for ψ onto its image
    const auto split = split_image(GroupHom::from_map(cover.gamma(), G, psi.values()));
    const auto ef = embedding_family_test(cover, split.psi);
    out["specialization.embedding-family"].record(
        ef.fiber_matches == ef.some_twist_has_point && ef.fiber_matches == ef.some_component_has_point, inst,
        "conditions disagree: " + std::to_string(ef.fiber_matches) + std::to_string(ef.some_twist_has_point) +
            std::to_string(ef.some_component_has_point));
  }
}

/// Torsor pairs beyond this many cocycles per Γ-group are not paired.
inline constexpr std::size_t kPartialQuotientCocycles = 16;

inline void partial_quotient_case(const corpus::GammaGroupCase& cs, Claims& out) {
  const auto& gg = cs.gg;
  auto cocycles = enumerate_cocycles(gg);
  cocycles.resize(std::min(cocycles.size(), kPartialQuotientCocycles));
  for (const auto& k : all_subgroups(gg.group())) {
    if (!k.is_normal()) continue;
    bool stable = true;
    for (element_t s = 0; s < gg.gamma().order() && stable; ++s)
      for (auto x : k.members()) stable = stable && k.contains(gg.act(s, x));
    if (!stable) continue;
    const auto q = gamma_quotient(gg, k);
    for (const auto& c1 : cocycles)
      for (const auto& c2 : cocycles) {
        if (!twisted_conjugate_equiv(push_cocycle(c1, q.projection, q.group), push_cocycle(c2, q.projection, q.group)))
          continue;
        const auto r = quotient_partiel_check(torsor_from_cocycle(c1), torsor_from_cocycle(c2), k);
        const auto inst = cs.name + " K=" + std::to_string(k.order()) + " c1=" + corpus::cocycle_name(c1) +
                          " c2=" + corpus::cocycle_name(c2);
        out["quotient.partial"].record(r.report.passing(), inst,
                                       r.report.failures.empty() ? std::string("no sections") : r.report.failures.front());
      }
  }
}

// ---- decomposition into components indexed by Z(G/Ḡ) ----

inline const std::vector<std::string>& decomposition_claims() {
  static const std::vector<std::string> ids{"decomposition.components"};
  return ids;
}

inline void decomposition_cover(const corpus::NamedCover& nc, Claims& out) {
  const auto& cover = nc.cover;
  const bool abelian_quotient = cover.scalar_group().is_abelian();
  for (const auto& psi : enumerate_cocycles(cover.gamma_group())) {
    if (!star_condition(cover, psi)) continue;
    const auto d = decomposition_components(cover, psi);
    std::string why;
    if (d.components.size() != center(cover.scalar_group()).order()) why = "component count differs from |Z(G/Gbar)|";
    for (const auto& comp : d.components) {
      if (!why.empty()) break;
      if (!comp.geometrically_connected) why = "component " + std::to_string(comp.center_element) + " not geometrically connected";
      else if (!comp.stable) why = "component " + std::to_string(comp.center_element) + " not pi-stable";
    }
    if (why.empty() && d.remainder.empty() != abelian_quotient) why = "remainder does not match commutativity of G/Gbar";
    out["decomposition.components"].record(why.empty(), nc.name + " psi=" + corpus::cocycle_name(psi), why);
  }
}

// ---- non-Galois covers ----

inline const std::vector<std::string>& nongalois_claims() {
  static const std::vector<std::string> ids{"nongalois.agrees-with-oracle"};
  return ids;
}

inline void nongalois_case(const corpus::NonGaloisCase& nc, Claims& out) {
  for (const auto& psi : enumerate_homs(nc.cover.gamma(), nc.nu.target())) {
    const auto r = nongalois_test(nc.cover, nc.nu, psi);
    const bool oracle = nongalois_oracle(nc.cover, nc.nu, psi);
    std::string inst = nc.name + " psi=[";
    for (std::size_t i = 0; i < psi.map().size(); ++i) inst += (i ? "," : "") + std::to_string(psi.map()[i]);
    inst += "] expect=" + std::string(oracle ? "yes" : "no");
    out["nongalois.agrees-with-oracle"].record(r.isomorphic_as_covers == oracle, inst);
  }
}

// ---- suites ----

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"twisting", "cocycles",       "h1",           "properties", "h1-map",
                                              "selftwist", "specialization", "decomposition", "nongalois"};
  return names;
}

inline std::vector<TwistReport> run_suite(const std::string& suite, const Options& opt) {
  if (suite == "theorem3") return run_suite("twisting", opt);
  if (suite == "all") {
    std::vector<TwistReport> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  auto over_cases = [&](const std::vector<std::string>& ids, const std::vector<corpus::GammaGroupCase>& cases,
                        void (*f)(const corpus::GammaGroupCase&, Claims&)) {
    return run_cases(ids, cases.size(), opt.jobs, [&](std::size_t i, Claims& c) { f(cases[i], c); });
  };
  if (suite == "twisting") return over_cases(twisting_claims(), corpus::gamma_group_cases(opt.max_order), twisting_case);
  if (suite == "cocycles") return over_cases(cocycle_claims(), corpus::cocycle_formula_cases(), cocycle_case);
  if (suite == "h1") return over_cases(h1_claims(), corpus::gamma_group_cases(opt.max_order), h1_case);
  if (suite == "properties") return over_cases(property_claims(), corpus::gamma_group_cases(opt.max_order), property_case);
  if (suite == "h1-map") return over_cases(h1_map_claims(), corpus::gamma_group_cases(opt.max_order), h1_map_case);
  if (suite == "selftwist") {
    std::vector<FiniteGroup> gs;
    for (auto& g : catalog::small_groups())
      if (g.order() <= opt.max_order) gs.push_back(g);
    return run_cases(selftwist_claims(), gs.size(), opt.jobs, [&](std::size_t i, Claims& c) { selftwist_group(gs[i], c); });
  }
  if (suite == "specialization") {
    const auto covers = corpus::covers();
    const auto cases = corpus::gamma_group_cases(opt.max_order);
    return run_cases(specialization_claims(), covers.size() + cases.size(), opt.jobs, [&](std::size_t i, Claims& c) {
      if (i < covers.size())
        specialization_cover(covers[i], c);
      else
        partial_quotient_case(cases[i - covers.size()], c);
    });
  }
  if (suite == "decomposition") {
    const auto covers = corpus::covers();
    return run_cases(decomposition_claims(), covers.size(), opt.jobs,
                     [&](std::size_t i, Claims& c) { decomposition_cover(covers[i], c); });
  }
  if (suite == "nongalois") {
    const auto cases = corpus::nongalois_cases();
    return run_cases(nongalois_claims(), cases.size(), opt.jobs,
                     [&](std::size_t i, Claims& c) { nongalois_case(cases[i], c); });
  }
  throw precondition_error("unknown suite '" + suite + "'");
}

}  // namespace torsor::verify
