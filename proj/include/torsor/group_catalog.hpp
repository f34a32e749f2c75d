#pragma once

#include <string>
#include <vector>

#include "torsor/finite_group.hpp"

namespace torsor::catalog {

inline FiniteGroup cyclic(std::size_t n) {
  std::vector<element_t> t(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<element_t>((a + b) % n);
  }
  return FiniteGroup::from_table("Z" + std::to_string(n), n, std::move(t), std::move(labels));
}

inline FiniteGroup trivial() { return cyclic(1).renamed("1"); }

/// Sₙ on {1..n}, elements in lexicographic order of image tables.
inline FiniteGroup symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t = perm::identity(n), r(n);
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<element_t>((i + 1) % n);
    gens = {r, t};
  }
  return FiniteGroup::from_permutations("S" + std::to_string(n), n, gens);
}

inline FiniteGroup alternating(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    Permutation c = perm::identity(n);
    c[0] = 1;
    c[1] = static_cast<element_t>(k);
    c[k] = 0;
    gens.push_back(c);
  }
  return FiniteGroup::from_permutations("A" + std::to_string(n), n, gens);
}

/// Symmetries of a regular n-gon (order 2n) acting on its vertices.
inline FiniteGroup dihedral(std::size_t n) {
  Permutation r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<element_t>((i + 1) % n);
    s[i] = static_cast<element_t>((n - i) % n);
  }
  return FiniteGroup::from_permutations("D" + std::to_string(n), n, {r, s});
}

/// Quaternion units ±1, ±i, ±j, ±k; element 2u + sign, u ∈ {1, i, j, k}.
inline FiniteGroup quaternion() {
  // unit products: m[a][b] = (sign, unit) of unit_a * unit_b
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<element_t> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int s = (a % 2) ^ (b % 2) ^ sign[ua][ub];
      t[a * 8 + b] = static_cast<element_t>(2 * unit[ua][ub] + s);
    }
  return FiniteGroup::from_table("Q8", 8, std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

/// A × B, element (a, b) numbered a·|B| + b.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name = {}) {
  const auto na = a.order(), nb = b.order(), n = na * nb;
  std::vector<element_t> t(n * n);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("(" + a.label(static_cast<element_t>(x / nb)) + "," + b.label(static_cast<element_t>(x % nb)) + ")");
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = static_cast<element_t>(a.mul(static_cast<element_t>(x / nb), static_cast<element_t>(y / nb)) * nb +
                                            b.mul(static_cast<element_t>(x % nb), static_cast<element_t>(y % nb)));
  }
  if (name.empty()) name = a.name() + "x" + b.name();
  return FiniteGroup::from_table(std::move(name), n, std::move(t), std::move(labels));
}

inline FiniteGroup klein() { return direct_product(cyclic(2), cyclic(2), "V4"); }

inline FiniteGroup elementary_abelian_8() {
  return direct_product(klein(), cyclic(2), "Z2^3");
}

/// Every group of order at most 8 up to isomorphism, smallest first.
inline std::vector<FiniteGroup> small_groups() {
  return {trivial(),  cyclic(2), cyclic(3),   cyclic(4),    klein(),
          cyclic(5),  cyclic(6), symmetric(3), cyclic(7),   cyclic(8),
          direct_product(cyclic(2), cyclic(4), "Z2xZ4"), elementary_abelian_8(), dihedral(4), quaternion()};
}

}  // namespace torsor::catalog
