#pragma once

// Brute-force reference computations. They read only raw multiplication and
// action tables and never call the library's algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "torsor/gamma_group.hpp"
#include "torsor/gamma_set.hpp"

namespace oracle {

using torsor::element_t;
using torsor::FiniteGroup;
using torsor::GammaGroup;

// Calls f on every vector in {0..base-1}^len, odometer order.
inline void odometer(std::size_t len, std::size_t base, const std::function<void(const std::vector<element_t>&)>& f) {
  std::vector<element_t> v(len, 0);
  while (true) {
    f(v);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++v[i] < base) break;
      v[i] = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

inline bool is_hom(const FiniteGroup& a, const FiniteGroup& b, const std::vector<element_t>& m) {
  for (element_t x = 0; x < a.order(); ++x)
    for (element_t y = 0; y < a.order(); ++y)
      if (m[a.mul(x, y)] != b.mul(m[x], m[y])) return false;
  return true;
}

inline std::vector<std::vector<element_t>> homs(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<std::vector<element_t>> out;
  odometer(a.order(), b.order(), [&](const std::vector<element_t>& m) {
    if (is_hom(a, b, m)) out.push_back(m);
  });
  return out;
}

inline std::size_t count_injective(const std::vector<std::vector<element_t>>& hs) {
  std::size_t n = 0;
  for (const auto& m : hs) {
    std::size_t kernel = 0;
    for (auto x : m) kernel += x == 0;
    n += kernel == 1;
  }
  return n;
}

// Conjugacy class sizes, ordered by smallest member.
inline std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::map<element_t, std::set<element_t>> classes;
  std::vector<bool> seen(g.order(), false);
  for (element_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    for (element_t h = 0; h < g.order(); ++h) {
      // h x h^-1 computed by solving h^-1 from the table
      element_t hinv = 0;
      while (g.mul(h, hinv) != 0) ++hinv;
      auto y = g.mul(g.mul(h, x), hinv);
      classes[x].insert(y);
      seen[y] = true;
    }
  }
  std::vector<std::size_t> out;
  for (auto& [_, c] : classes) out.push_back(c.size());
  return out;
}

inline std::size_t centralizer_order(const FiniteGroup& g, element_t x) {
  std::size_t n = 0;
  for (element_t h = 0; h < g.order(); ++h) n += g.mul(h, x) == g.mul(x, h);
  return n;
}

inline std::size_t center_order(const FiniteGroup& g) {
  std::size_t n = 0;
  for (element_t x = 0; x < g.order(); ++x) n += centralizer_order(g, x) == g.order();
  return n;
}

inline bool cocycle_ok(const GammaGroup& gg, const std::vector<element_t>& c) {
  const auto& gam = gg.gamma();
  const auto& g = gg.group();
  for (element_t s = 0; s < gam.order(); ++s)
    for (element_t t = 0; t < gam.order(); ++t)
      if (c[gam.mul(s, t)] != g.mul(c[s], gg.act(s, c[t]))) return false;
  return true;
}

inline std::vector<std::vector<element_t>> cocycles(const GammaGroup& gg) {
  std::vector<std::vector<element_t>> out;
  odometer(gg.gamma().order(), gg.group().order(), [&](const std::vector<element_t>& c) {
    if (cocycle_ok(gg, c)) out.push_back(c);
  });
  return out;
}

inline std::vector<element_t> twisted_conjugate(const GammaGroup& gg, const std::vector<element_t>& c, element_t h) {
  const auto& g = gg.group();
  element_t hinv = 0;
  while (g.mul(h, hinv) != 0) ++hinv;
  std::vector<element_t> out;
  for (element_t s = 0; s < c.size(); ++s) out.push_back(g.mul(g.mul(hinv, c[s]), gg.act(s, h)));
  return out;
}

// Twisted-conjugacy class sizes of all cocycles, sorted ascending.
inline std::vector<std::size_t> h1_sizes(const GammaGroup& gg) {
  auto all = cocycles(gg);
  std::set<std::vector<element_t>> done;
  std::vector<std::size_t> out;
  for (const auto& c : all) {
    if (done.count(c)) continue;
    std::set<std::vector<element_t>> cls;
    for (element_t h = 0; h < gg.group().order(); ++h) cls.insert(twisted_conjugate(gg, c, h));
    done.insert(cls.begin(), cls.end());
    out.push_back(cls.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t orbit_count(std::size_t n, const std::function<element_t(element_t, element_t)>& act,
                               std::size_t gamma_order) {
  std::vector<int> label(n, -1);
  int next = 0;
  for (element_t x = 0; x < n; ++x) {
    if (label[x] >= 0) continue;
    for (element_t s = 0; s < gamma_order; ++s) label[act(s, x)] = next;
    ++next;
  }
  return static_cast<std::size_t>(next);
}

// All bijections commuting with both actions of two objects, by trying every
// permutation of the points.
inline std::size_t equivariant_count(const torsor::GObject& a, const torsor::GObject& b) {
  if (a.size() != b.size()) return 0;
  std::vector<element_t> f(a.size());
  std::iota(f.begin(), f.end(), 0);
  std::size_t n = 0;
  do {
    bool ok = true;
    for (element_t x = 0; x < a.size() && ok; ++x) {
      for (element_t s = 0; s < a.gamma_group().gamma().order() && ok; ++s) ok = f[a.gamma_act(s, x)] == b.gamma_act(s, f[x]);
      for (element_t g = 0; g < a.gamma_group().group().order() && ok; ++g) ok = f[a.g_act(g, x)] == b.g_act(g, f[x]);
    }
    n += ok;
  } while (std::next_permutation(f.begin(), f.end()));
  return n;
}

inline std::mt19937& rng() {
  static std::mt19937 r(20240611u);
  return r;
}

template <class T>
const T& pick(const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng())];
}

}  // namespace oracle
