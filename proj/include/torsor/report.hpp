#pragma once

#include <cctype>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "torsor/twist.hpp"

namespace torsor {

enum class Format { text, machine };

/// One output line. Positional fields print bare in text form; every field
/// prints as key=value in machine form.
struct Record {
  struct Field {
    std::string key, value;
    bool positional = false;
  };
  std::string kind;
  std::vector<Field> fields;

  Record& pos(std::string key, std::string value) {
    fields.push_back({std::move(key), std::move(value), true});
    return *this;
  }
  Record& kv(std::string key, std::string value) {
    fields.push_back({std::move(key), std::move(value), false});
    return *this;
  }
  template <class N>
    requires std::is_arithmetic_v<N>
  Record& kv(std::string key, N value) {
    return kv(std::move(key), std::to_string(value));
  }
};

struct Report {
  std::vector<std::pair<std::string, std::string>> header;  // printed after '#'
  std::vector<Record> records;

  void meta(std::string key, std::string value) { header.emplace_back(std::move(key), std::move(value)); }
  Record& add(std::string kind) {
    records.push_back({std::move(kind), {}});
    return records.back();
  }
};

namespace detail {

inline std::string machine_value(std::string v) {
  for (auto& c : v)
    if (c == ' ' || c == '\t') c = '_';
  return v.empty() ? "-" : v;
}

inline std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace detail

/// Stable rendering: header lines first, then records in insertion order.
inline void emit_report(std::ostream& out, const Report& r, Format fmt) {
  for (const auto& [k, v] : r.header)
    out << "# " << k << '=' << (fmt == Format::machine ? detail::machine_value(v) : v) << '\n';
  for (const auto& rec : r.records) {
    if (fmt == Format::text) {
      out << rec.kind;
      for (const auto& f : rec.fields) {
        out << ' ';
        if (!f.positional) out << f.key << '=';
        out << f.value;
      }
    } else {
      out << "record=" << detail::lower(rec.kind);
      for (const auto& f : rec.fields) out << ' ' << f.key << '=' << detail::machine_value(f.value);
    }
    out << '\n';
  }
}

/// `CLAIM <id> PASS|FAIL instances=<n>` and one WITNESS line per failure.
inline void add_claim(Report& r, const TwistReport& t) {
  r.add("CLAIM")
      .pos("id", t.claim)
      .pos("status", t.passing() ? "PASS" : "FAIL")
      .kv("instances", t.instances);
  for (const auto& f : t.failures) r.add("WITNESS").pos("claim", t.claim).pos("detail", f);
}

}  // namespace torsor
