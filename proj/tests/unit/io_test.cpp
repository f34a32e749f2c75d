#include <gtest/gtest.h>

#include <fstream>

#include "torsor/corpus.hpp"
#include "torsor/io.hpp"
#include "torsor/report.hpp"

using namespace torsor;
namespace fs = std::filesystem;

namespace {

const fs::path kData = TORSOR_DATA_DIR;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("torsor-io-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return path_ / name;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string parse_failure(const std::string& text) {
  try {
    io::parse_group(io::parse_text(text));
  } catch (const parse_error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Io, SampleGroupsLoad) {
  io::Loader ld;
  EXPECT_EQ(ld.group(kData / "z2.grp").order(), 2u);
  EXPECT_EQ(ld.group(kData / "z3.grp").order(), 3u);
  EXPECT_EQ(ld.group(kData / "z4.grp").order(), 4u);
  EXPECT_EQ(ld.group(kData / "s3.grp").order(), 6u);
  EXPECT_EQ(ld.group(kData / "d4.grp").order(), 8u);
  const auto q8 = ld.group(kData / "q8.grp");
  EXPECT_EQ(q8.order(), 8u);
  std::vector<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(q8)) sizes.push_back(c.members.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(center(ld.group(kData / "d4.grp")).order(), 2u);
  EXPECT_EQ(center(q8).order(), 2u);
}

TEST(Io, SampleDocumentsLoad) {
  io::Loader ld;
  auto inv = ld.load_action(kData / "z3_inversion.act");
  EXPECT_EQ(inv.act(1, 1), 2u);
  auto c = ld.load_cocycle(kData / "transposition.coc");
  EXPECT_EQ(c.gamma_group().group().label(c(1)), "(1 2)");
  EXPECT_EQ(ld.load_cocycle(kData / "trivial_z2_s3.coc").values(), (std::vector<element_t>{0, 0}));
  EXPECT_EQ(ld.load_cocycle(kData / "z4_trivial.coc").values().size(), 2u);
  auto cover = ld.load_cover(kData / "sign_cover.cov");
  EXPECT_EQ(sections(cover).size(), 3u);
  auto nosec = ld.load_cover(kData / "z4_no_section.cov");
  EXPECT_TRUE(sections(nosec).empty());
  auto gs = ld.load_gammaset(kData / "two_points.gset");
  EXPECT_EQ(fixed_points(gs).size(), 2u);
  auto sw = ld.load_gammaset(kData / "swapped.gset");
  EXPECT_TRUE(fixed_points(sw).empty());
  auto obj = ld.load_gobject(kData / "signs.gobj");
  auto tw = ld.load_gobject(kData / "signs_twisted.gobj");
  EXPECT_EQ(obj.size(), 2u);
  EXPECT_EQ(twist(obj, c).base(), tw.base());
  for (const auto* f : {"sign.hom", "id_s3.hom", "nu_s3.hom", "psi_transposition.hom", "psi_trivial.hom"})
    EXPECT_NO_THROW(ld.load_hom(kData / f)) << f;
  const auto z4 = ld.group(kData / "z4.grp"), z2 = ld.group(kData / "z2.grp");
  EXPECT_TRUE(ld.load_hom(kData / "mod2.hom", z4, z2).is_surjective());
  EXPECT_EQ(ld.load_hom(kData / "id_z4.hom", z4, z4), GroupHom::identity(z4));
}

TEST(Io, PermutationDialectMatchesCatalog) {
  auto g = io::parse_group(io::parse_text("group S4 degree 4\ngens\n(1 2 3 4)\n(1 2)\n"));
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(g.table().size(), catalog::symmetric(4).table().size());
  EXPECT_TRUE(std::equal(g.table().begin(), g.table().end(), catalog::symmetric(4).table().begin()));
  EXPECT_EQ(g.label(0), "()");
}

TEST(Io, ErrorsCarryLineNumbers) {
  EXPECT_NE(parse_failure("# comment\ngroup g order 2\ntable\n0 1\n1 1\n").find("line 5: row not a permutation, row 1"),
            std::string::npos);
  EXPECT_NE(parse_failure("group g order 2\ntable\n0 1\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_failure("group g order 2\ntable\n0 1\n1 x\n").find("line 4"), std::string::npos);
  EXPECT_NE(parse_failure("group g degree 3\ngens\n(1 4)\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_failure("grp g order 2\n").find("line 1"), std::string::npos);
  EXPECT_FALSE(parse_failure("").empty());
}

TEST(Io, OrderCapAppliesAtLoad) {
  EXPECT_THROW(io::parse_group(io::parse_text("group S4 degree 4\ngens\n(1 2 3 4); (1 2)\n"), 12), parse_error);
  EXPECT_THROW(io::parse_group(io::parse_text("group z3 order 3\ntable\n0 1 2\n1 2 0\n2 0 1\n"), 2), parse_error);
}

TEST(Io, CocycleErrors) {
  TempDir tmp;
  fs::copy_file(kData / "z2.grp", tmp.path() / "z2.grp");
  fs::copy_file(kData / "s3.grp", tmp.path() / "s3.grp");
  io::Loader ld;
  auto bad = tmp.write("bad.coc", "cocycle gamma z2.grp group s3.grp action trivial\nmap\n0 -> ()\n1 -> (1 2 3)\n");
  EXPECT_THROW(ld.load_cocycle(bad), parse_error);
  auto twice = tmp.write("twice.coc", "cocycle gamma z2.grp group s3.grp action trivial\nmap\n0 -> ()\n0 -> ()\n");
  EXPECT_THROW(ld.load_cocycle(twice), parse_error);
  auto missing = tmp.write("missing.coc", "cocycle gamma z2.grp group s3.grp action trivial\nmap\n0 -> ()\n");
  EXPECT_THROW(ld.load_cocycle(missing), parse_error);
  auto unknown = tmp.write("unknown.coc", "cocycle gamma z2.grp group s3.grp action trivial\nmap\n0 -> ()\n1 -> (1 4)\n");
  EXPECT_THROW(ld.load_cocycle(unknown), parse_error);
  EXPECT_THROW(ld.load_cocycle(tmp.path() / "absent.coc"), parse_error);
}

TEST(Io, WritersRoundTrip) {
  TempDir tmp;
  io::Loader ld;
  for (const auto& g : catalog::small_groups()) {
    auto path = tmp.write(g.name() + ".grp", io::write_group(g));
    auto back = ld.group(path);
    EXPECT_EQ(back.order(), g.order());
    EXPECT_TRUE(std::equal(back.table().begin(), back.table().end(), g.table().begin())) << g.name();
    for (element_t x = 0; x < g.order(); ++x) EXPECT_EQ(back.find(g.label(x)), std::optional<element_t>(x)) << g.name();
  }
  tmp.write("gamma.grp", io::write_group(catalog::cyclic(2)));
  for (const auto& cs : corpus::cocycle_formula_cases()) {
    if (cs.gg.gamma().order() != 2) continue;
    tmp.write("group.grp", io::write_group(cs.gg.group()));
    tmp.write("action.act", io::write_action(cs.gg, "gamma.grp", "group.grp"));
    io::Loader fresh;
    auto gg = fresh.load_action(tmp.path() / "action.act");
    EXPECT_EQ(gg.action(), cs.gg.action()) << cs.name;
    for (const auto& c : enumerate_cocycles(cs.gg)) {
      auto p = tmp.write("c.coc", io::write_cocycle(c, "gamma.grp", "group.grp", "action.act"));
      EXPECT_EQ(io::Loader().load_cocycle(p).values(), c.values()) << cs.name;
    }
    for (const auto& [name, xi] : cs.objects) {
      tmp.write("base.gset", io::write_gammaset(xi.base(), name, "gamma.grp"));
      auto p = tmp.write("obj.gobj", io::write_gobject(xi, name, "base.gset", "group.grp", "action.act"));
      auto back = io::Loader().load_gobject(p);
      EXPECT_EQ(back.base().table(), xi.base().table()) << cs.name << " " << name;
      EXPECT_EQ(back.gaction(), xi.gaction()) << cs.name << " " << name;
    }
  }
  const auto covers = corpus::covers();
  const auto& nc = covers.front();
  tmp.write("pi.grp", io::write_group(nc.cover.pi()));
  tmp.write("g.grp", io::write_group(nc.cover.group()));
  tmp.write("u.hom", io::write_hom(nc.cover.u(), "pi.grp", "gamma.grp"));
  tmp.write("phi.hom", io::write_hom(nc.cover.phi()));
  auto cp = tmp.write("c.cov", io::write_cover("pi.grp", "gamma.grp", "u.hom", "g.grp", "phi.hom"));
  auto back = io::Loader().load_cover(cp);
  EXPECT_EQ(back.u().map(), nc.cover.u().map());
  EXPECT_EQ(back.phi().map(), nc.cover.phi().map());
}

TEST(Io, FnvDigestIsStable) {
  EXPECT_EQ(io::hex64(io::fnv1a64("")), "cbf29ce484222325");
  EXPECT_EQ(io::hex64(io::fnv1a64("a")), "af63dc4c8601ec8c");
}

TEST(Report, TextAndMachineFormats) {
  Report r;
  r.meta("command", "demo");
  std::ostringstream empty;
  emit_report(empty, r, Format::text);
  EXPECT_EQ(empty.str(), "# command=demo\n");

  TwistReport t{"demo.claim", 0, 0, {}};
  t.record(true, "a");
  t.record(false, "b", "(gamma 1, point 2)");
  add_claim(r, t);
  std::ostringstream text, machine;
  emit_report(text, r, Format::text);
  emit_report(machine, r, Format::machine);
  EXPECT_NE(text.str().find("CLAIM demo.claim FAIL instances=2"), std::string::npos) << text.str();
  EXPECT_NE(text.str().find("WITNESS demo.claim b (gamma 1, point 2)"), std::string::npos) << text.str();
  EXPECT_NE(machine.str().find("record=claim"), std::string::npos) << machine.str();
  EXPECT_EQ(machine.str().find("point 2"), std::string::npos) << machine.str();
}
