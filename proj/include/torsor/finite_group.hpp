#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torsor/errors.hpp"

namespace torsor {

/// Dense element identifier. 0 is always the identity.
using element_t = std::uint32_t;

/// Default cap on group orders; every verification here is exhaustive.
inline constexpr std::size_t kDefaultMaxOrder = 512;

/// 0-based image table of a permutation of {0, ..., degree-1}.
using Permutation = std::vector<element_t>;

namespace perm {

inline Permutation identity(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), element_t{0});
  return p;
}

// (a * b)(i) = a(b(i)): apply b first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Permutation inverse(const Permutation& a) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<element_t>(i);
  return r;
}

inline bool is_permutation(std::span<const element_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

/// Cycle notation on 1-based points, e.g. "(1 2 3)(4 5)"; identity is "()".
inline std::string to_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace perm

/// A finite group given by its Cayley table on identifiers 0..order-1.
///
/// Instances are immutable and share their tables, so copies are cheap and
/// safe to hand to other threads.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup() : FiniteGroup(make_trivial()) {}

  /// Validates `table` (row-major, table[a*order+b] = a*b) as a group law.
  /// Throws invariant_error naming a witness when it is not one.
  static FiniteGroup from_table(std::string name, std::size_t order, std::vector<element_t> table,
                                std::vector<std::string> labels = {},
                                std::size_t max_order = kDefaultMaxOrder) {
    if (order == 0) throw invariant_error("group order must be positive");
    if (order > max_order)
      throw invariant_error("group order " + std::to_string(order) + " exceeds cap " +
                            std::to_string(max_order));
    if (table.size() != order * order) throw invariant_error("table size does not match order");
    for (auto x : table)
      if (x >= order) throw invariant_error("table entry out of range: " + std::to_string(x));
    for (std::size_t a = 0; a < order; ++a) {
      if (!perm::is_permutation(std::span(table).subspan(a * order, order)))
        throw invariant_error("row not a permutation, row " + std::to_string(a));
    }
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<element_t> col(order);
      for (std::size_t a = 0; a < order; ++a) col[a] = table[a * order + b];
      if (!perm::is_permutation(col))
        throw invariant_error("column not a permutation, column " + std::to_string(b));
    }
    for (std::size_t a = 0; a < order; ++a) {
      if (table[a] != a || table[a * order] != a)
        throw invariant_error("0 is not a two-sided identity, witness " + std::to_string(a));
    }
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        const auto ab = table[a * order + b];
        for (std::size_t c = 0; c < order; ++c) {
          if (table[ab * order + c] != table[a * order + table[b * order + c]])
            throw invariant_error("not associative, witness (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    return FiniteGroup(std::move(name), order, std::move(table), std::move(labels));
  }

  /// Closes `generators` (permutations of {0..degree-1}) into a group. Elements
  /// are numbered in lexicographic order of their image tables, so the identity
  /// gets 0; labels are cycle notation.
  static FiniteGroup from_permutations(std::string name, std::size_t degree,
                                       const std::vector<Permutation>& generators,
                                       std::size_t max_order = kDefaultMaxOrder) {
    auto elems = close_permutations(degree, generators, max_order);
    return from_permutation_list(std::move(name), elems);
  }

  /// Builds the group on an already closed, lexicographically sorted list of
  /// permutations (identity first). Used for automorphism groups.
  static FiniteGroup from_permutation_list(std::string name, const std::vector<Permutation>& elems) {
    std::map<Permutation, element_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<element_t>(i));
    const auto n = elems.size();
    std::vector<element_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto it = index.find(perm::compose(elems[a], elems[b]));
        if (it == index.end()) throw invariant_error("permutation list is not closed");
        table[a * n + b] = it->second;
      }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elems) labels.push_back(perm::to_cycles(p));
    return FiniteGroup(std::move(name), n, std::move(table), std::move(labels));
  }

  static std::vector<Permutation> close_permutations(std::size_t degree,
                                                     const std::vector<Permutation>& generators,
                                                     std::size_t max_order = kDefaultMaxOrder) {
    for (const auto& g : generators)
      if (g.size() != degree || !perm::is_permutation(g))
        throw invariant_error("generator is not a permutation of degree " + std::to_string(degree));
    std::map<Permutation, bool> seen;
    std::vector<Permutation> frontier{perm::identity(degree)};
    seen.emplace(frontier.front(), true);
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier)
        for (const auto& g : generators) {
          auto y = perm::compose(x, g);
          if (seen.emplace(y, true).second) {
            if (seen.size() > max_order)
              throw invariant_error("generated group exceeds order cap " + std::to_string(max_order));
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
    std::vector<Permutation> out;
    out.reserve(seen.size());
    for (auto& [p, _] : seen) out.push_back(p);
    return out;  // std::map keeps them sorted
  }

  std::size_t order() const noexcept { return data_->order; }
  const std::string& name() const noexcept { return data_->name; }

  element_t mul(element_t a, element_t b) const noexcept { return data_->table[a * data_->order + b]; }
  element_t inv(element_t a) const noexcept { return data_->inverse[a]; }
  // g x g^-1
  element_t conj(element_t g, element_t x) const noexcept { return mul(mul(g, x), inv(g)); }

  element_t pow(element_t a, std::size_t k) const noexcept {
    element_t r = 0;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  std::size_t element_order(element_t a) const noexcept {
    std::size_t k = 1;
    for (element_t x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  const std::string& label(element_t a) const { return data_->labels[a]; }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }

  /// Resolves a label or, failing that, a decimal id. Commas and spaces are
  /// interchangeable inside labels.
  std::optional<element_t> find(std::string_view token) const {
    const auto key = normalize_label(token);
    for (std::size_t i = 0; i < order(); ++i)
      if (normalize_label(data_->labels[i]) == key) return static_cast<element_t>(i);
    if (!key.empty() && std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      auto v = std::stoull(key);
      if (v < order()) return static_cast<element_t>(v);
    }
    return std::nullopt;
  }

  std::span<const element_t> table() const noexcept { return data_->table; }

  bool is_abelian() const noexcept {
    for (element_t a = 0; a < order(); ++a)
      for (element_t b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Same set with the reversed law a*b := b*a.
  FiniteGroup opposite() const {
    const auto n = order();
    std::vector<element_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = data_->table[b * n + a];
    return FiniteGroup(name() + "^op", n, std::move(t), data_->labels);
  }

  /// A small generating set, chosen greedily in identifier order.
  const std::vector<element_t>& generators() const noexcept { return data_->generators; }

  FiniteGroup renamed(std::string name) const {
    return FiniteGroup(std::move(name), order(), data_->table, data_->labels);
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.data_ == b.data_ || a.data_->table == b.data_->table;
  }

  static std::string normalize_label(std::string_view s) {
    std::string out;
    bool pending_space = false;
    for (char c : s) {
      if (c == ' ' || c == ',' || c == '\t' || c == '\r' || c == '\n') {
        pending_space = !out.empty();
        continue;
      }
      if (pending_space && c != ')' && c != '(' && out.back() != '(' && out.back() != ')') out += ' ';
      pending_space = false;
      out += c;
    }
    return out;
  }

 private:
  struct Data {
    std::string name;
    std::size_t order{};
    std::vector<element_t> table;
    std::vector<element_t> inverse;
    std::vector<std::string> labels;
    std::vector<element_t> generators;
  };

  FiniteGroup(std::string name, std::size_t order, std::vector<element_t> table,
              std::vector<std::string> labels) {
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->order = order;
    d->table = std::move(table);
    d->inverse.assign(order, 0);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        if (d->table[a * order + b] == 0) d->inverse[a] = static_cast<element_t>(b);
    if (labels.size() != order) {
      labels.clear();
      for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
    }
    d->labels = std::move(labels);
    d->generators = greedy_generators(*d);
    data_ = std::move(d);
  }

  static FiniteGroup make_trivial() { return FiniteGroup("1", 1, {0}, {"e"}); }

  static std::vector<element_t> greedy_generators(const Data& d) {
    std::vector<bool> in(d.order, false);
    in[0] = true;
    std::vector<element_t> gens;
    for (element_t x = 1; x < d.order; ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      // re-close the subgroup generated so far
      std::vector<element_t> members;
      for (element_t y = 0; y < d.order; ++y)
        if (in[y]) members.push_back(y);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (auto g : gens) {
          auto z = d.table[members[i] * d.order + g];
          if (!in[z]) {
            in[z] = true;
            members.push_back(z);
          }
        }
    }
    return gens;
  }

  std::shared_ptr<const Data> data_;
};

/// A subgroup, stored as the sorted list of its members.
class Subgroup {
 public:
  /// Validates closure; `members` may be in any order.
  static Subgroup from_members(FiniteGroup parent, std::vector<element_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<bool> mask(parent.order(), false);
    for (auto m : members) {
      if (m >= parent.order()) throw invariant_error("subgroup member out of range");
      mask[m] = true;
    }
    if (members.empty() || members.front() != 0) throw invariant_error("subgroup does not contain identity");
    for (auto a : members) {
      if (!mask[parent.inv(a)])
        throw invariant_error("subgroup not closed under inverse at " + std::to_string(a));
      for (auto b : members)
        if (!mask[parent.mul(a, b)])
          throw invariant_error("subgroup not closed at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    return Subgroup(std::move(parent), std::move(members), std::move(mask));
  }

  static Subgroup generated(FiniteGroup parent, std::span<const element_t> gens) {
    std::vector<bool> mask(parent.order(), false);
    std::vector<element_t> members{0};
    mask[0] = true;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto g : gens) {
        auto z = parent.mul(members[i], g);
        if (!mask[z]) {
          mask[z] = true;
          members.push_back(z);
        }
      }
    std::sort(members.begin(), members.end());
    return Subgroup(std::move(parent), std::move(members), std::move(mask));
  }

  static Subgroup whole(const FiniteGroup& g) {
    std::vector<element_t> all(g.order());
    std::iota(all.begin(), all.end(), element_t{0});
    return Subgroup(g, std::move(all), std::vector<bool>(g.order(), true));
  }

  static Subgroup trivial(const FiniteGroup& g) {
    std::vector<bool> mask(g.order(), false);
    mask[0] = true;
    return Subgroup(g, {0}, std::move(mask));
  }

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<element_t>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(element_t x) const noexcept { return x < mask_.size() && mask_[x]; }

  /// First (g, k) with g k g^-1 outside the subgroup, if any.
  std::optional<std::pair<element_t, element_t>> normality_witness() const {
    for (element_t g = 0; g < parent_.order(); ++g)
      for (auto k : members_)
        if (!contains(parent_.conj(g, k))) return std::pair{g, k};
    return std::nullopt;
  }
  bool is_normal() const { return !normality_witness().has_value(); }

  /// The subgroup as a group in its own right; member i becomes element i.
  FiniteGroup as_group(std::string name = {}) const {
    const auto n = members_.size();
    std::vector<element_t> pos(parent_.order(), 0);
    for (std::size_t i = 0; i < n; ++i) pos[members_[i]] = static_cast<element_t>(i);
    std::vector<element_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = pos[parent_.mul(members_[a], members_[b])];
    std::vector<std::string> labels;
    for (auto m : members_) labels.push_back(parent_.label(m));
    if (name.empty()) name = parent_.name() + "_sub" + std::to_string(n);
    return FiniteGroup::from_table(std::move(name), n, std::move(t), std::move(labels), n);
  }

  /// g H g^-1
  Subgroup conjugate(element_t g) const {
    std::vector<element_t> m;
    m.reserve(members_.size());
    for (auto h : members_) m.push_back(parent_.conj(g, h));
    return from_members(parent_, std::move(m));
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  Subgroup(FiniteGroup parent, std::vector<element_t> members, std::vector<bool> mask)
      : parent_(std::move(parent)), members_(std::move(members)), mask_(std::move(mask)) {}

  FiniteGroup parent_;
  std::vector<element_t> members_;
  std::vector<bool> mask_;
};

/// A homomorphism between finite groups, stored as its value table.
class GroupHom {
 public:
  static GroupHom from_map(FiniteGroup source, FiniteGroup target, std::vector<element_t> map) {
    if (map.size() != source.order()) throw invariant_error("hom table length differs from source order");
    for (auto y : map)
      if (y >= target.order()) throw invariant_error("hom value out of range");
    if (map[0] != 0) throw invariant_error("hom does not send identity to identity");
    for (element_t a = 0; a < source.order(); ++a)
      for (element_t b = 0; b < source.order(); ++b)
        if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
          throw invariant_error("not a homomorphism at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    return GroupHom(std::move(source), std::move(target), std::move(map));
  }

  static GroupHom identity(const FiniteGroup& g) {
    std::vector<element_t> m(g.order());
    std::iota(m.begin(), m.end(), element_t{0});
    return GroupHom(g, g, std::move(m));
  }

  static GroupHom trivial(const FiniteGroup& source, const FiniteGroup& target) {
    return GroupHom(source, target, std::vector<element_t>(source.order(), 0));
  }

  /// Inclusion of a subgroup, from its as_group() form.
  static GroupHom inclusion(const Subgroup& h) {
    return GroupHom(h.as_group(), h.parent(), h.members());
  }

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  const std::vector<element_t>& map() const noexcept { return map_; }
  element_t operator()(element_t x) const noexcept { return map_[x]; }

  bool is_injective() const {
    std::vector<bool> seen(target_.order(), false);
    for (auto y : map_) {
      if (seen[y]) return false;
      seen[y] = true;
    }
    return true;
  }
  bool is_surjective() const { return image().order() == target_.order(); }

  Subgroup kernel() const {
    std::vector<element_t> k;
    for (element_t x = 0; x < map_.size(); ++x)
      if (map_[x] == 0) k.push_back(x);
    return Subgroup::from_members(source_, std::move(k));
  }

  Subgroup image() const { return Subgroup::from_members(target_, map_); }

  Subgroup image_of(const Subgroup& h) const {
    std::vector<element_t> m;
    for (auto x : h.members()) m.push_back(map_[x]);
    return Subgroup::from_members(target_, std::move(m));
  }

  /// (this ∘ inner)(x) = this(inner(x))
  GroupHom after(const GroupHom& inner) const {
    if (!(inner.target() == source_)) throw precondition_error("composition of incompatible homs");
    std::vector<element_t> m(inner.source().order());
    for (element_t x = 0; x < m.size(); ++x) m[x] = map_[inner(x)];
    return GroupHom(inner.source(), target_, std::move(m));
  }

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.map_ == b.map_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  GroupHom(FiniteGroup s, FiniteGroup t, std::vector<element_t> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<element_t> map_;
};

struct ConjugacyClass {
  element_t representative;  // smallest identifier in the class
  std::vector<element_t> members;
};

/// Conjugacy classes ordered by representative.
inline std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> done(g.order(), false);
  std::vector<ConjugacyClass> out;
  for (element_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    ConjugacyClass cls{x, {}};
    for (element_t h = 0; h < g.order(); ++h) {
      auto y = g.conj(h, x);
      if (!done[y]) {
        done[y] = true;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  return out;
}

inline Subgroup centralizer(const FiniteGroup& g, element_t x) {
  std::vector<element_t> m;
  for (element_t h = 0; h < g.order(); ++h)
    if (g.mul(h, x) == g.mul(x, h)) m.push_back(h);
  return Subgroup::from_members(g, std::move(m));
}

inline Subgroup center(const FiniteGroup& g) {
  std::vector<element_t> m;
  for (element_t h = 0; h < g.order(); ++h) {
    bool central = true;
    for (element_t x = 0; x < g.order() && central; ++x) central = g.mul(h, x) == g.mul(x, h);
    if (central) m.push_back(h);
  }
  return Subgroup::from_members(g, std::move(m));
}

inline Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<element_t> comms;
  for (element_t a = 0; a < g.order(); ++a)
    for (element_t b = 0; b < g.order(); ++b) comms.push_back(g.mul(g.mul(a, b), g.inv(g.mul(b, a))));
  return Subgroup::generated(g, comms);
}

/// All subgroups, ordered by member list.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  // Every subgroup of a group this small is generated by at most a few
  // elements; grow from cyclic subgroups by joining until nothing new appears.
  std::map<std::vector<element_t>, Subgroup> found;
  std::vector<Subgroup> frontier;
  for (element_t x = 0; x < g.order(); ++x) {
    auto s = Subgroup::generated(g, std::span<const element_t>(&x, 1));
    if (found.emplace(s.members(), s).second) frontier.push_back(s);
  }
  std::vector<Subgroup> cyclic = frontier;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier)
      for (const auto& c : cyclic) {
        if (c.order() > 1 && s.contains(c.members()[1]) && s.contains(c.members().back())) continue;
        auto gens = s.members();
        gens.insert(gens.end(), c.members().begin(), c.members().end());
        auto j = Subgroup::generated(g, gens);
        if (found.emplace(j.members(), j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (auto& [_, s] : found) out.push_back(s);
  return out;
}

struct QuotientGroup {
  FiniteGroup group;
  GroupHom projection;  // the canonical surjection G -> G/K
};

/// G/K on cosets, numbered by their smallest member (identity coset first).
/// Throws precondition_error with a conjugation witness if K is not normal.
inline QuotientGroup quotient(const FiniteGroup& g, const Subgroup& k) {
  if (!(k.parent() == g)) throw precondition_error("subgroup belongs to another group");
  if (auto w = k.normality_witness())
    throw precondition_error("subgroup not normal: conjugating " + std::to_string(w->second) + " by " +
                             std::to_string(w->first) + " leaves it");
  std::vector<element_t> coset(g.order(), 0);
  std::vector<bool> assigned(g.order(), false);
  std::vector<element_t> reps;
  for (element_t x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    const auto id = static_cast<element_t>(reps.size());
    reps.push_back(x);
    for (auto m : k.members()) {
      coset[g.mul(x, m)] = id;
      assigned[g.mul(x, m)] = true;
    }
  }
  const auto n = reps.size();
  std::vector<element_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = coset[g.mul(reps[a], reps[b])];
  std::vector<std::string> labels;
  for (auto r : reps) labels.push_back("[" + g.label(r) + "]");
  auto q = FiniteGroup::from_table(g.name() + "/" + std::to_string(k.order()), n, std::move(t), std::move(labels), n);
  return {q, GroupHom::from_map(g, q, coset)};
}

/// Constraint set for enumerate_homs. `composed_with` = (after, required)
/// keeps only f with after ∘ f == required.
struct HomConstraints {
  bool injective = false;
  bool surjective = false;
  std::optional<std::pair<GroupHom, GroupHom>> composed_with;
};

namespace detail {

// Extends generator images to a table by walking x -> x*gen. Returns nullopt on
// a conflict, i.e. when the assignment does not define a homomorphism.
inline std::optional<std::vector<element_t>> extend_on_generators(const FiniteGroup& src, const FiniteGroup& dst,
                                                                  const std::vector<element_t>& gens,
                                                                  const std::vector<element_t>& images) {
  constexpr auto unset = static_cast<element_t>(-1);
  std::vector<element_t> f(src.order(), unset);
  f[0] = 0;
  std::vector<element_t> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto x = queue[qi];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto y = src.mul(x, gens[i]);
      const auto fy = dst.mul(f[x], images[i]);
      if (f[y] == unset) {
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return std::nullopt;
      }
    }
  }
  return f;
}

}  // namespace detail

/// Every homomorphism G -> H meeting the constraints, in lexicographic order
/// of the value table. Backtracks over images of a generating set of G.
inline std::vector<GroupHom> enumerate_homs(const FiniteGroup& g, const FiniteGroup& h,
                                            const HomConstraints& constraints = {}) {
  const auto& gens = g.generators();
  std::vector<std::vector<element_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto ord = g.element_order(gens[i]);
    for (element_t y = 0; y < h.order(); ++y) {
      const auto oy = h.element_order(y);
      if (ord % oy != 0) continue;
      if (constraints.injective && oy != ord) continue;
      if (constraints.composed_with) {
        const auto& [after, required] = *constraints.composed_with;
        if (after(y) != required(gens[i])) continue;
      }
      candidates[i].push_back(y);
    }
  }
  std::vector<std::vector<element_t>> tables;
  std::vector<element_t> images(gens.size());
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      auto f = detail::extend_on_generators(g, h, gens, images);
      if (!f) return;
      if (constraints.injective || constraints.surjective) {
        std::vector<bool> hit(h.order(), false);
        std::size_t distinct = 0;
        for (auto y : *f)
          if (!hit[y]) {
            hit[y] = true;
            ++distinct;
          }
        if (constraints.injective && distinct != g.order()) return;
        if (constraints.surjective && distinct != h.order()) return;
      }
      if (constraints.composed_with) {
        const auto& [after, required] = *constraints.composed_with;
        for (element_t x = 0; x < g.order(); ++x)
          if (after((*f)[x]) != required(x)) return;
      }
      tables.push_back(std::move(*f));
      return;
    }
    for (auto y : candidates[depth]) {
      images[depth] = y;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(tables.begin(), tables.end());
  std::vector<GroupHom> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.push_back(GroupHom::from_map(g, h, std::move(t)));
  return out;
}

/// Aut(G) as permutations of the element identifiers, lexicographically sorted.
inline std::vector<Permutation> automorphisms(const FiniteGroup& g) {
  HomConstraints injective;
  injective.injective = true;
  std::vector<Permutation> out;
  for (auto& f : enumerate_homs(g, g, injective)) out.push_back(f.map());
  return out;
}

/// Aut(G) as a group (composition of permutations of G's elements).
inline FiniteGroup automorphism_group(const FiniteGroup& g) {
  return FiniteGroup::from_permutation_list("Aut(" + g.name() + ")", automorphisms(g));
}

}  // namespace torsor
