#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "torsor/io.hpp"
#include "torsor/report.hpp"
#include "torsor/verification.hpp"

namespace torsor::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kInput = 2;
inline constexpr int kNotExists = 3;

struct RunConfig {
  std::string command;
  Format format = Format::text;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t corpus_order = 8;
  std::size_t jobs = 1;
  bool up_to_conjugacy = false;
  std::string gamma, group, action = "trivial", cocycle, object = "regular", a, b, cover, psi, nu, suite = "all";
};

namespace detail {

inline std::string labels_of(const FiniteGroup& g, const std::vector<element_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ";" : "") + io::format_label(g.label(xs[i]));
  return s;
}

inline std::string ids_of(const std::vector<element_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

inline void digest(Report& r, const std::string& role, const std::string& path) {
  r.meta(role, path);
  r.meta(role + ".fnv1a64", io::hex64(io::fnv1a64(io::read_file(path))));
}

inline void describe_gamma_set(Report& r, const GammaSet& s) {
  const auto orbs = orbits(s);
  const auto fixed = fixed_points(s);
  r.add("OBJECT").kv("points", s.size()).kv("orbits", orbs.size()).kv("fixed", fixed.size());
  for (element_t g = 0; g < s.gamma().order(); ++g)
    r.add("GAMMA").pos("element", io::format_label(s.gamma().label(g))).kv("row", ids_of(s.row(g)));
  for (std::size_t i = 0; i < orbs.size(); ++i) r.add("ORBIT").pos("index", std::to_string(i)).kv("points", ids_of(orbs[i]));
  if (!fixed.empty()) r.add("FIXED").kv("points", ids_of(fixed));
}

inline std::string section_text(const GroupHom& s) { return labels_of(s.target(), s.map()); }

}  // namespace detail

inline int cmd_h1(const RunConfig& cfg, Report& r) {
  io::Loader ld(cfg.max_order);
  const auto gamma = ld.group(cfg.gamma);
  const auto g = ld.group(cfg.group);
  const auto gg = ld.gamma_group(gamma, g, cfg.action, {});
  detail::digest(r, "gamma", cfg.gamma);
  detail::digest(r, "group", cfg.group);
  if (cfg.action != "trivial") detail::digest(r, "action", cfg.action);
  const auto H = h1(gg);
  r.add("H1").kv("classes", H.classes.size()).kv("cocycles", H.cocycles.size());
  for (std::size_t i = 0; i < H.classes.size(); ++i)
    r.add("CLASS")
        .pos("index", std::to_string(i))
        .kv("size", H.classes[i].size)
        .kv("representative", detail::labels_of(g, H.classes[i].representative.values()));
  return kOk;
}

inline GObject object_for(const std::string& spec, const GammaGroup& gg, io::Loader& ld) {
  if (spec == "regular") return regular_object(gg);
  if (spec == "point") return point_object(gg);
  if (spec == "conjugation") return conjugation_object(gg);
  auto o = ld.load_gobject(spec);
  if (!(o.gamma_group() == gg)) throw precondition_error("object and cocycle are over different gamma-groups");
  return o;
}

inline int cmd_twist(const RunConfig& cfg, Report& r) {
  io::Loader ld(cfg.max_order);
  const auto c = ld.load_cocycle(cfg.cocycle);
  detail::digest(r, "cocycle", cfg.cocycle);
  if (io::fs::exists(cfg.object)) detail::digest(r, "object", cfg.object);
  else r.meta("object", cfg.object);
  const auto xi = object_for(cfg.object, c.gamma_group(), ld);
  const auto tw = twist(xi, c);
  detail::describe_gamma_set(r, tw.base());
  const auto& G = c.gamma_group().group();
  for (element_t s = 0; s < c.gamma_group().gamma().order(); ++s) {
    std::vector<element_t> row;
    for (element_t g = 0; g < G.order(); ++g) row.push_back(inner_form(c).act(s, g));
    r.add("INNER").pos("element", io::format_label(c.gamma_group().gamma().label(s))).kv("row", detail::ids_of(row));
  }
  return kOk;
}

inline std::string doc_keyword(const std::string& path) {
  const auto doc = io::read_document(path);
  return doc.lines.empty() ? std::string{} : io::split_ws(doc.lines.front().second).front();
}

inline int cmd_isom(const RunConfig& cfg, Report& r) {
  io::Loader ld(cfg.max_order);
  detail::digest(r, "a", cfg.a);
  detail::digest(r, "b", cfg.b);
  const auto ka = doc_keyword(cfg.a), kb = doc_keyword(cfg.b);
  if (ka == "cocycle" && kb == "cocycle") {
    const auto ca = ld.load_cocycle(cfg.a), cb = ld.load_cocycle(cfg.b);
    if (!(ca.gamma_group() == cb.gamma_group())) throw precondition_error("cocycles over different gamma-groups");
    const auto w = twisted_conjugate_equiv(ca, cb);
    const auto isom = twist_torsor(torsor_from_cocycle(ca), torsor_from_cocycle(cb));
    auto& rec = r.add("ISOM").kv("kind", "torsor").kv("isomorphic", w ? "yes" : "no");
    rec.kv("isom-fixed", fixed_points(isom.base()).size());
    if (w) rec.kv("witness", io::format_label(ca.gamma_group().group().label(*w)));
    return w ? kOk : kNotExists;
  }
  if (ka != "gobject" || kb != "gobject") throw precondition_error("isom needs two cocycle or two gobject documents");
  const auto a = ld.load_gobject(cfg.a), b = ld.load_gobject(cfg.b);
  const auto res = isom_object(a, b);
  const auto& aut = res.aut.perms.group;
  r.add("ISOM")
      .kv("kind", "object")
      .kv("aut-order", aut.order())
      .kv("torsor-fixed", fixed_points(res.torsor.base()).size())
      .kv("cocycle", detail::labels_of(aut, res.cocycle.values()))
      .kv("basepoint", detail::ids_of(res.basepoint))
      .kv("witness", detail::ids_of(res.witness));
  return fixed_points(res.torsor.base()).empty() ? kNotExists : kOk;
}

inline int cmd_selftwist(const RunConfig& cfg, Report& r) {
  io::Loader ld(cfg.max_order);
  const auto gamma = ld.group(cfg.gamma);
  const auto g = ld.group(cfg.group);
  detail::digest(r, "gamma", cfg.gamma);
  detail::digest(r, "group", cfg.group);
  if (!(gamma == g)) throw precondition_error("selftwist needs gamma and group to be the same group");
  const auto d = self_twist_decomposition(validate_cocycle(GammaGroup::trivial(g, g), GroupHom::identity(g).map()));
  r.add("SELFTWIST").kv("components", d.components.size()).kv("fixed", d.fixed_count);
  for (std::size_t i = 0; i < d.components.size(); ++i)
    r.add("COMPONENT")
        .pos("index", std::to_string(i))
        .kv("size", d.components[i].orbit.size())
        .kv("stabilizer-order", d.components[i].stabilizer.order())
        .kv("stabilizer", detail::labels_of(g, d.components[i].stabilizer.members()));
  return kOk;
}

inline int cmd_specialize(const RunConfig& cfg, Report& r) {
  io::Loader ld(cfg.max_order);
  const auto cover = ld.load_cover(cfg.cover);
  const auto psi_raw = ld.load_cocycle(cfg.psi);
  detail::digest(r, "cover", cfg.cover);
  detail::digest(r, "psi", cfg.psi);
  const auto gg = cover.gamma_group();
  if (!(psi_raw.gamma_group() == gg)) throw precondition_error("psi is not a cocycle for the cover's gamma and group");
  const auto& psi = psi_raw;
  const auto secs = sections(cover, cfg.up_to_conjugacy);
  r.add("COVER")
      .kv("pi", cover.pi().order())
      .kv("gamma", cover.gamma().order())
      .kv("group", cover.group().order())
      .kv("gbar", cover.g_bar().order())
      .kv("sections", secs.size())
      .kv("up-to-conjugacy", cfg.up_to_conjugacy ? "yes" : "no");
  for (std::size_t i = 0; i < secs.size(); ++i)
    r.add("SECTION")
        .pos("index", std::to_string(i))
        .kv("map", detail::section_text(secs[i]))
        .kv("specialization", detail::labels_of(cover.group(), specialization(cover, secs[i]).values()));
  const auto found = specialization_exists_twisted(cover, psi);
  const auto oracle = specialization_exists_oracle(cover, psi);
  const bool star = star_condition(cover, psi);
  auto& res = r.add("RESULT").kv("exists", found ? "yes" : "no").kv("oracle", oracle ? "yes" : "no").kv("star",
                                                                                                    star ? "yes" : "no");
  if (found) res.kv("section", detail::section_text(*found));
  if (star) {
    res.kv("census", pac_census(cover, psi));
    const auto d = decomposition_components(cover, psi);
    for (const auto& comp : d.components)
      r.add("COMPONENT")
          .pos("center", io::format_label(cover.scalar_group().label(comp.center_element)))
          .kv("size", comp.points.size())
          .kv("geometrically-connected", comp.geometrically_connected ? "yes" : "no")
          .kv("points", detail::ids_of(comp.points));
    if (!d.remainder.empty()) r.add("REMAINDER").kv("points", detail::ids_of(d.remainder));
  }
  if (found.has_value() != oracle.has_value()) throw invariant_error("twisted test and oracle disagree");
  return found ? kOk : kNotExists;
}

inline int cmd_nongalois(const RunConfig& cfg, Report& r) {
  io::Loader ld(cfg.max_order);
  const auto cover = ld.load_cover(cfg.cover);
  const auto nu = ld.load_hom(cfg.nu, cover.group());
  const auto psi = ld.load_hom(cfg.psi, cover.gamma(), nu.target());
  detail::digest(r, "cover", cfg.cover);
  detail::digest(r, "nu", cfg.nu);
  detail::digest(r, "psi", cfg.psi);
  const auto res = nongalois_test(cover, nu, psi);
  const bool oracle = nongalois_oracle(cover, nu, psi);
  r.add("RESULT")
      .kv("isomorphic", res.isomorphic_as_covers ? "yes" : "no")
      .kv("strict", res.strict_isomorphic ? "yes" : "no")
      .kv("oracle", oracle ? "yes" : "no")
      .kv("embeddings", res.embeddings)
      .kv("strict-embeddings", res.strict_embeddings);
  for (const auto& [eta, s] : res.witnesses)
    r.add("EMBEDDING").kv("eta", detail::labels_of(eta.target(), eta.map())).kv("section", detail::section_text(s));
  if (res.isomorphic_as_covers != oracle) throw invariant_error("non-Galois test and oracle disagree");
  return res.isomorphic_as_covers ? kOk : kNotExists;
}

inline int cmd_verify(const RunConfig& cfg, Report& r) {
  verify::Options opt;
  opt.max_order = cfg.corpus_order;
  opt.jobs = cfg.jobs;
  r.meta("suite", cfg.suite);
  r.meta("maxorder", std::to_string(cfg.corpus_order));
  const auto reports = verify::run_suite(cfg.suite, opt);
  std::string ids;
  for (const auto& t : reports) ids += t.claim + "\n";
  r.meta("claims.fnv1a64", io::hex64(io::fnv1a64(ids)));
  bool pass = true;
  for (const auto& t : reports) {
    add_claim(r, t);
    pass = pass && t.passing();
  }
  return pass ? kOk : kInternal;
}

/// Parses `args` (without the program name), runs the command, and writes
/// the report to `out` and diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Torsor twisting over finite Gamma-sets", "torsor"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "text";
  std::optional<std::size_t> max_order;
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  auto* h1c = app.add_subcommand("h1", "list H1 classes of a gamma-group");
  h1c->add_option("--gamma", cfg.gamma)->required();
  h1c->add_option("--group", cfg.group)->required();
  h1c->add_option("--action", cfg.action, "trivial or an action document");
  h1c->add_option("--maxorder", max_order);

  auto* tw = app.add_subcommand("twist", "twist an object by a cocycle");
  tw->add_option("--cocycle", cfg.cocycle)->required();
  tw->add_option("--object", cfg.object, "regular, point, conjugation or a gobject document");
  tw->add_option("--maxorder", max_order);

  auto* is = app.add_subcommand("isom", "isomorphism torsor between two objects or torsors");
  is->add_option("--a", cfg.a)->required();
  is->add_option("--b", cfg.b)->required();
  is->add_option("--maxorder", max_order);

  auto* st = app.add_subcommand("selftwist", "orbits of Isom(P, P) for the regular extension");
  st->add_option("--gamma", cfg.gamma)->required();
  st->add_option("--group", cfg.group)->required();
  st->add_option("--maxorder", max_order);

  auto* sp = app.add_subcommand("specialize", "twisting-lemma test for a cover and a target cocycle");
  sp->add_option("--cover", cfg.cover)->required();
  sp->add_option("--psi", cfg.psi)->required();
  sp->add_flag("--conj", cfg.up_to_conjugacy, "list sections up to conjugacy");
  sp->add_option("--maxorder", max_order);

  auto* ng = app.add_subcommand("nongalois", "twisting test for a non-Galois cover");
  ng->add_option("--cover", cfg.cover)->required();
  ng->add_option("--nu", cfg.nu)->required();
  ng->add_option("--psi", cfg.psi)->required();
  ng->add_option("--maxorder", max_order);

  auto* vf = app.add_subcommand("verify", "run the exhaustive verification suites");
  std::vector<std::string> suites = verify::suite_names();
  suites.insert(suites.end(), {"all", "theorem3"});
  vf->add_option("--suite", cfg.suite)->check(CLI::IsMember(suites));
  vf->add_option("--maxorder", cfg.corpus_order);
  vf->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "machine" ? Format::machine : Format::text;

  if (const char* env = std::getenv("TORSOR_MAX_ORDER")) {
    try {
      cfg.max_order = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: TORSOR_MAX_ORDER is not a number\n";
      return kInput;
    }
  }
  if (max_order) cfg.max_order = *max_order;
  if (cfg.max_order < 2 || cfg.corpus_order < 2) {
    err << "error: order cap must be at least 2\n";
    return kInput;
  }

  Report report;
  report.meta("command", cfg.command);
  int code = kOk;
  try {
    if (cfg.command == "h1") code = cmd_h1(cfg, report);
    else if (cfg.command == "twist") code = cmd_twist(cfg, report);
    else if (cfg.command == "isom") code = cmd_isom(cfg, report);
    else if (cfg.command == "selftwist") code = cmd_selftwist(cfg, report);
    else if (cfg.command == "specialize") code = cmd_specialize(cfg, report);
    else if (cfg.command == "nongalois") code = cmd_nongalois(cfg, report);
    else code = cmd_verify(cfg, report);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const invariant_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  emit_report(out, report, cfg.format);
  return code;
}

}  // namespace torsor::cli
