#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "torsor/cover.hpp"

namespace torsor::io {

namespace fs = std::filesystem;

/// Non-blank lines of a document with comments removed, plus the directory
/// that relative references are resolved against.
struct Document {
  fs::path dir;
  std::string origin;
  std::vector<std::pair<std::size_t, std::string>> lines;  // (1-based line number, text)
};

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline Document parse_text(const std::string& text, fs::path dir = {}, std::string origin = "<text>") {
  Document doc{std::move(dir), std::move(origin), {}};
  std::istringstream in(text);
  std::size_t no = 0;
  for (std::string line; std::getline(in, line);) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (!line.empty()) doc.lines.emplace_back(no, std::move(line));
  }
  return doc;
}

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error(0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Document read_document(const fs::path& path) {
  return parse_text(read_file(path), path.parent_path(), path.string());
}

/// 64-bit FNV-1a, used for input digests in report headers.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 15];
  return s;
}

namespace detail {

inline std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error(line, std::string("expected a number for ") + what + ", got '" + tok + "'");
  return std::stoull(tok);
}

inline std::vector<element_t> parse_row(const std::string& text, std::size_t line, std::size_t expected) {
  std::vector<element_t> row;
  for (const auto& w : split_ws(text)) row.push_back(static_cast<element_t>(parse_count(w, line, "table entry")));
  if (row.size() != expected)
    throw parse_error(line, "expected " + std::to_string(expected) + " entries, got " + std::to_string(row.size()));
  return row;
}

// "kw1 v1 kw2 v2 ..." after the leading keyword (and optional name).
inline std::map<std::string, std::string> header_pairs(const std::vector<std::string>& words, std::size_t start,
                                                       std::size_t line) {
  std::map<std::string, std::string> kv;
  if ((words.size() - start) % 2 != 0) throw parse_error(line, "header keywords and values do not pair up");
  for (std::size_t i = start; i < words.size(); i += 2) kv[words[i]] = words[i + 1];
  return kv;
}

inline const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key, std::size_t line) {
  auto it = kv.find(key);
  if (it == kv.end()) throw parse_error(line, "header is missing '" + key + "'");
  return it->second;
}

inline element_t resolve(const FiniteGroup& g, const std::string& token, std::size_t line) {
  auto x = g.find(token);
  if (!x) throw parse_error(line, "unknown element '" + token + "' of " + g.name());
  return *x;
}

// Parses "(1 2 3)(4 5)" into a permutation of degree d; "()" is the identity.
inline Permutation parse_cycles(const std::string& text, std::size_t degree, std::size_t line) {
  Permutation p = perm::identity(degree);
  std::size_t i = 0;
  const auto n = text.size();
  auto skip = [&] {
    while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip();
  while (i < n) {
    if (text[i] != '(') throw parse_error(line, "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<element_t> cycle;
    for (;;) {
      skip();
      if (i >= n) throw parse_error(line, "unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < n && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) throw parse_error(line, "bad character in cycle notation: " + text);
      const auto v = std::stoull(text.substr(i, j - i));
      if (v < 1 || v > degree) throw parse_error(line, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cycle.push_back(static_cast<element_t>(v - 1));
      i = j;
    }
    std::vector<bool> seen(degree, false);
    for (auto c : cycle) {
      if (seen[c]) throw parse_error(line, "point repeated in a cycle: " + text);
      seen[c] = true;
    }
    // cycles compose right to left, as for products of permutations
    Permutation c = perm::identity(degree);
    for (std::size_t k = 0; k < cycle.size(); ++k) c[cycle[k]] = cycle[(k + 1) % cycle.size()];
    p = perm::compose(p, c);
    skip();
  }
  return p;
}

}  // namespace detail

/// Group-definition document in the `table` or `perm` dialect.
inline FiniteGroup parse_group(const Document& doc, std::size_t max_order = kDefaultMaxOrder) {
  if (doc.lines.empty()) throw parse_error(0, "empty group document");
  const auto& [l0, head] = doc.lines.front();
  const auto w = split_ws(head);
  if (w.size() != 4 || w[0] != "group" || (w[2] != "order" && w[2] != "degree"))
    throw parse_error(l0, "expected 'group <name> order <n>' or 'group <name> degree <d>'");
  const auto& name = w[1];
  const auto n = detail::parse_count(w[3], l0, w[2].c_str());
  std::size_t i = 1;
  if (w[2] == "degree") {
    if (n == 0) throw parse_error(l0, "degree must be positive");
    if (i >= doc.lines.size() || doc.lines[i].second != "gens") throw parse_error(i < doc.lines.size() ? doc.lines[i].first : l0, "expected 'gens'");
    std::vector<Permutation> gens;
    for (++i; i < doc.lines.size(); ++i) {
      const auto& [ln, text] = doc.lines[i];
      std::stringstream parts(text);
      for (std::string piece; std::getline(parts, piece, ';');)
        if (!trim(piece).empty()) gens.push_back(detail::parse_cycles(trim(piece), n, ln));
    }
    try {
      return FiniteGroup::from_permutations(name, n, gens, max_order);
    } catch (const invariant_error& e) {
      throw parse_error(l0, e.what());
    }
  }
  if (n == 0) throw parse_error(l0, "order must be positive");
  if (n > max_order) throw parse_error(l0, "group order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
  std::vector<std::string> labels;
  if (i < doc.lines.size() && doc.lines[i].second.rfind("elements", 0) == 0) {
    auto lw = split_ws(doc.lines[i].second);
    if (lw.front() != "elements") throw parse_error(doc.lines[i].first, "expected 'elements' or 'table'");
    labels.assign(lw.begin() + 1, lw.end());
    if (labels.size() != n)
      throw parse_error(doc.lines[i].first, "expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
    ++i;
  }
  if (i >= doc.lines.size() || doc.lines[i].second != "table")
    throw parse_error(i < doc.lines.size() ? doc.lines[i].first : l0, "expected 'table'");
  ++i;
  if (doc.lines.size() - i != n)
    throw parse_error(doc.lines.back().first, "expected " + std::to_string(n) + " table rows, got " + std::to_string(doc.lines.size() - i));
  std::vector<element_t> table;
  for (std::size_t r = 0; r < n; ++r) {
    const auto& [ln, text] = doc.lines[i + r];
    auto row = detail::parse_row(text, ln, n);
    for (auto x : row)
      if (x >= n) throw parse_error(ln, "table entry " + std::to_string(x) + " out of range");
    table.insert(table.end(), row.begin(), row.end());
  }
  try {
    return FiniteGroup::from_table(name, n, std::move(table), std::move(labels), max_order);
  } catch (const invariant_error& e) {
    const std::string what = e.what();
    const std::string key = "row not a permutation, row ";
    std::size_t line = l0;
    if (what.rfind(key, 0) == 0) line = doc.lines[i + std::stoull(what.substr(key.size()))].first;
    throw parse_error(line, what);
  }
}

inline std::string format_label(const std::string& label) {
  std::string s = label;
  for (auto& c : s)
    if (c == ' ') c = ',';
  return s;
}

/// Table dialect, labels included (spaces inside labels become commas).
inline std::string write_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << "group " << g.name() << " order " << g.order() << "\nelements";
  for (const auto& l : g.labels()) out << ' ' << format_label(l);
  out << "\ntable\n";
  for (element_t a = 0; a < g.order(); ++a) {
    for (element_t b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  return out.str();
}

/// Loads documents relative to each other, caching groups by path.
class Loader {
 public:
  explicit Loader(std::size_t max_order = kDefaultMaxOrder) : max_order_(max_order) {}

  std::size_t max_order() const noexcept { return max_order_; }

  FiniteGroup group(const fs::path& path) {
    const auto key = fs::weakly_canonical(path).string();
    if (auto it = groups_.find(key); it != groups_.end()) return it->second;
    auto g = parse_group(read_document(path), max_order_);
    groups_.emplace(key, g);
    return g;
  }

  /// `spec` is "trivial" or an action document.
  GammaGroup gamma_group(const FiniteGroup& gamma, const FiniteGroup& g, const std::string& spec, const fs::path& dir) {
    if (spec == "trivial") return GammaGroup::trivial(gamma, g);
    return parse_action(read_document(dir / spec), gamma, g);
  }

  /// `action gamma <f> group <f>`, `table`, then |Γ| rows of |G| entries.
  GammaGroup parse_action(const Document& doc, const FiniteGroup& gamma, const FiniteGroup& g) {
    expect_keyword(doc, "action");
    std::size_t i = 1;
    if (i >= doc.lines.size() || doc.lines[i].second != "table") throw parse_error(line_at(doc, i), "expected 'table'");
    ++i;
    if (doc.lines.size() - i != gamma.order())
      throw parse_error(line_at(doc, i), "expected " + std::to_string(gamma.order()) + " action rows");
    std::vector<Permutation> act;
    for (std::size_t r = 0; r < gamma.order(); ++r) {
      const auto& [ln, text] = doc.lines[i + r];
      auto row = detail::parse_row(text, ln, g.order());
      for (auto x : row)
        if (x >= g.order()) throw parse_error(ln, "action entry out of range");
      act.push_back(std::move(row));
    }
    try {
      return GammaGroup::from_action(gamma, g, std::move(act));
    } catch (const invariant_error& e) {
      throw parse_error(doc.lines.front().first, e.what());
    }
  }

  GammaGroup load_action(const fs::path& path) {
    auto doc = read_document(path);
    auto kv = header(doc, "action", false);
    auto gamma = group(doc.dir / detail::need(kv, "gamma", doc.lines.front().first));
    auto g = group(doc.dir / detail::need(kv, "group", doc.lines.front().first));
    return parse_action(doc, gamma, g);
  }

  Cocycle load_cocycle(const fs::path& path) { return parse_cocycle(read_document(path)); }

  Cocycle parse_cocycle(const Document& doc) {
    auto kv = header(doc, "cocycle", false);
    const auto l0 = doc.lines.front().first;
    auto gamma = group(doc.dir / detail::need(kv, "gamma", l0));
    auto g = group(doc.dir / detail::need(kv, "group", l0));
    auto gg = gamma_group(gamma, g, detail::need(kv, "action", l0), doc.dir);
    if (doc.lines.size() < 2 || doc.lines[1].second != "map") throw parse_error(line_at(doc, 1), "expected 'map'");
    auto values = parse_arrows(doc, 2, gamma, g);
    try {
      return validate_cocycle(gg, std::move(values));
    } catch (const invariant_error& e) {
      throw parse_error(l0, e.what());
    }
  }

  /// Lines `x -> y`; an optional `hom source <f> target <f>` header names the
  /// groups, otherwise they must be supplied.
  GroupHom load_hom(const fs::path& path, std::optional<FiniteGroup> source = {},
                    std::optional<FiniteGroup> target = {}) {
    auto doc = read_document(path);
    std::size_t start = 0;
    if (!doc.lines.empty() && doc.lines.front().second.rfind("hom", 0) == 0 &&
        split_ws(doc.lines.front().second).front() == "hom") {
      auto kv = detail::header_pairs(split_ws(doc.lines.front().second), 1, doc.lines.front().first);
      if (!source) source = group(doc.dir / detail::need(kv, "source", doc.lines.front().first));
      if (!target) target = group(doc.dir / detail::need(kv, "target", doc.lines.front().first));
      start = 1;
    }
    if (!source || !target) throw parse_error(0, path.string() + ": homomorphism file needs a 'hom source .. target ..' header");
    auto values = parse_arrows(doc, start, *source, *target);
    try {
      return GroupHom::from_map(*source, *target, std::move(values));
    } catch (const invariant_error& e) {
      throw parse_error(line_at(doc, start), e.what());
    }
  }

  /// `gammaset <name> gamma <f> size <n>`, `action`, |Γ| rows of n entries.
  GammaSet load_gammaset(const fs::path& path) {
    auto doc = read_document(path);
    auto kv = header(doc, "gammaset", true);
    const auto l0 = doc.lines.front().first;
    auto gamma = group(doc.dir / detail::need(kv, "gamma", l0));
    const auto n = detail::parse_count(detail::need(kv, "size", l0), l0, "size");
    if (doc.lines.size() < 2 || doc.lines[1].second != "action") throw parse_error(line_at(doc, 1), "expected 'action'");
    if (doc.lines.size() - 2 != gamma.order())
      throw parse_error(line_at(doc, 2), "expected " + std::to_string(gamma.order()) + " action rows");
    std::vector<element_t> t;
    for (std::size_t r = 0; r < gamma.order(); ++r) {
      auto row = detail::parse_row(doc.lines[2 + r].second, doc.lines[2 + r].first, n);
      for (auto x : row)
        if (x >= n) throw parse_error(doc.lines[2 + r].first, "point out of range");
      t.insert(t.end(), row.begin(), row.end());
    }
    try {
      return GammaSet::from_table(gamma, n, std::move(t));
    } catch (const invariant_error& e) {
      throw parse_error(l0, e.what());
    }
  }

  /// `gobject <name> gammaset <f> group <f> action <trivial|f>`, `gaction`,
  /// |G| rows of n entries.
  GObject load_gobject(const fs::path& path) {
    auto doc = read_document(path);
    auto kv = header(doc, "gobject", true);
    const auto l0 = doc.lines.front().first;
    auto base = load_gammaset(doc.dir / detail::need(kv, "gammaset", l0));
    auto g = group(doc.dir / detail::need(kv, "group", l0));
    auto gg = gamma_group(base.gamma(), g, detail::need(kv, "action", l0), doc.dir);
    if (doc.lines.size() < 2 || doc.lines[1].second != "gaction") throw parse_error(line_at(doc, 1), "expected 'gaction'");
    if (doc.lines.size() - 2 != g.order())
      throw parse_error(line_at(doc, 2), "expected " + std::to_string(g.order()) + " gaction rows");
    std::vector<element_t> t;
    for (std::size_t r = 0; r < g.order(); ++r) {
      auto row = detail::parse_row(doc.lines[2 + r].second, doc.lines[2 + r].first, base.size());
      for (auto x : row)
        if (x >= base.size()) throw parse_error(doc.lines[2 + r].first, "point out of range");
      t.insert(t.end(), row.begin(), row.end());
    }
    try {
      return GObject::make(std::move(base), std::move(gg), std::move(t));
    } catch (const invariant_error& e) {
      throw parse_error(l0, e.what());
    }
  }

  /// `cover pi <f> gamma <f> u <hom> g <f> phi <hom>`.
  CoverSpec load_cover(const fs::path& path) {
    auto doc = read_document(path);
    auto kv = header(doc, "cover", false);
    const auto l0 = doc.lines.front().first;
    auto pi = group(doc.dir / detail::need(kv, "pi", l0));
    auto gamma = group(doc.dir / detail::need(kv, "gamma", l0));
    auto g = group(doc.dir / detail::need(kv, "g", l0));
    auto u = load_hom(doc.dir / detail::need(kv, "u", l0), pi, gamma);
    auto phi = load_hom(doc.dir / detail::need(kv, "phi", l0), pi, g);
    try {
      return CoverSpec::make(std::move(u), std::move(phi));
    } catch (const invariant_error& e) {
      throw parse_error(l0, e.what());
    }
  }

 private:
  static std::size_t line_at(const Document& doc, std::size_t i) {
    if (doc.lines.empty()) return 0;
    return i < doc.lines.size() ? doc.lines[i].first : doc.lines.back().first;
  }

  static void expect_keyword(const Document& doc, const std::string& kw) {
    if (doc.lines.empty()) throw parse_error(0, doc.origin + ": empty document");
    if (split_ws(doc.lines.front().second).front() != kw)
      throw parse_error(doc.lines.front().first, "expected a '" + kw + "' document");
  }

  static std::map<std::string, std::string> header(const Document& doc, const std::string& kw, bool named) {
    expect_keyword(doc, kw);
    const auto w = split_ws(doc.lines.front().second);
    if (named && w.size() < 2) throw parse_error(doc.lines.front().first, "missing name");
    return detail::header_pairs(w, named ? 2 : 1, doc.lines.front().first);
  }

  static std::vector<element_t> parse_arrows(const Document& doc, std::size_t start, const FiniteGroup& src,
                                             const FiniteGroup& dst) {
    constexpr auto unset = static_cast<element_t>(-1);
    std::vector<element_t> values(src.order(), unset);
    for (std::size_t i = start; i < doc.lines.size(); ++i) {
      const auto& [ln, text] = doc.lines[i];
      const auto arrow = text.find("->");
      if (arrow == std::string::npos) throw parse_error(ln, "expected 'x -> y'");
      const auto x = detail::resolve(src, trim(text.substr(0, arrow)), ln);
      const auto y = detail::resolve(dst, trim(text.substr(arrow + 2)), ln);
      if (values[x] != unset) throw parse_error(ln, "element '" + src.label(x) + "' assigned twice");
      values[x] = y;
    }
    for (element_t x = 0; x < values.size(); ++x)
      if (values[x] == unset) throw parse_error(line_at(doc, start), "no value given for '" + src.label(x) + "'");
    return values;
  }

  std::size_t max_order_;
  std::map<std::string, FiniteGroup> groups_;
};

inline FiniteGroup load_group(const fs::path& path, std::size_t max_order = kDefaultMaxOrder) {
  return parse_group(read_document(path), max_order);
}

// ---- writers (file references are written as given) ----

inline std::string write_arrows(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<element_t>& values) {
  std::ostringstream out;
  for (element_t x = 0; x < src.order(); ++x) out << format_label(src.label(x)) << " -> " << format_label(dst.label(values[x])) << '\n';
  return out.str();
}

inline std::string write_cocycle(const Cocycle& c, const std::string& gamma_file, const std::string& group_file,
                                 const std::string& action) {
  const auto& gg = c.gamma_group();
  return "cocycle gamma " + gamma_file + " group " + group_file + " action " + action + "\nmap\n" +
         write_arrows(gg.gamma(), gg.group(), c.values());
}

inline std::string write_hom(const GroupHom& f, const std::string& source_file = {}, const std::string& target_file = {}) {
  std::string head;
  if (!source_file.empty()) head = "hom source " + source_file + " target " + target_file + "\n";
  return head + write_arrows(f.source(), f.target(), f.map());
}

inline std::string write_action(const GammaGroup& gg, const std::string& gamma_file, const std::string& group_file) {
  std::ostringstream out;
  out << "action gamma " << gamma_file << " group " << group_file << "\ntable\n";
  for (const auto& row : gg.action()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

inline std::string write_gammaset(const GammaSet& s, const std::string& name, const std::string& gamma_file) {
  std::ostringstream out;
  out << "gammaset " << name << " gamma " << gamma_file << " size " << s.size() << "\naction\n";
  for (element_t g = 0; g < s.gamma().order(); ++g) {
    for (element_t x = 0; x < s.size(); ++x) out << (x ? " " : "") << s.act(g, x);
    out << '\n';
  }
  return out.str();
}

inline std::string write_gobject(const GObject& o, const std::string& name, const std::string& gammaset_file,
                                 const std::string& group_file, const std::string& action) {
  std::ostringstream out;
  out << "gobject " << name << " gammaset " << gammaset_file << " group " << group_file << " action " << action
      << "\ngaction\n";
  for (element_t g = 0; g < o.gamma_group().group().order(); ++g) {
    for (element_t x = 0; x < o.size(); ++x) out << (x ? " " : "") << o.g_act(g, x);
    out << '\n';
  }
  return out.str();
}

inline std::string write_cover(const std::string& pi, const std::string& gamma, const std::string& u,
                               const std::string& g, const std::string& phi) {
  return "cover pi " + pi + " gamma " + gamma + " u " + u + " g " + g + " phi " + phi + "\n";
}

}  // namespace torsor::io
