#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linfinf/demos.hpp"
#include "linfinf/errors.hpp"
#include "linfinf/random_gen.hpp"
#include "linfinf/serialize.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace linfinf;

namespace {

namespace fs = std::filesystem;

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("linfinf_io_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spill(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = scratch_dir() / ("out_" + std::to_string(counter) + ".txt");
  fs::path err = scratch_dir() / ("err_" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = std::string("\"") + LINFINF_CLI_PATH + "\" " + args + " > " + out.string() +
                    " 2> " + err.string();
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return CliResult{code, slurp(out), slurp(err)};
}

fs::path write_manifest(const std::string& name, const std::string& kind, Json payload) {
  fs::path p = scratch_dir() / name;
  spill(p, wrap_manifest(kind, std::move(payload)).dump(2));
  return p;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("round trips are exact in both directions") {
  Rng rng(787);
  for (int trial = 0; trial < 40; ++trial) {
    Interval iv = rand_interval(rng);
    CHECK(interval_from_json(interval_to_json(iv), "$") == iv);
    CHECK(interval_to_json(interval_from_json(interval_to_json(iv), "$")) ==
          interval_to_json(iv));

    Figure2D fig = rand_figure(rng);
    CHECK(figure_from_json(figure_to_json(fig), "$").boxes() == fig.boxes());

    SimpleFunc f = rand_simple_func(rng);
    Json jf = simple_func_to_json(f);
    CHECK(simple_func_to_json(simple_func_from_json(jf, "$")) == jf);

    LineFunc lf = rand_line_func(rng);
    CHECK(line_func_from_json(line_func_to_json(lf), "$") == lf);

    LineRule lr = rand_line_rule(rng);
    Json jr = line_rule_to_json(lr);
    CHECK(line_rule_to_json(line_rule_from_json(jr, "$")) == jr);

    Germ g = rand_germ(rng);
    Json jg = germ_to_json(g);
    Germ back = germ_from_json(jg, "$");
    CHECK(germ_to_json(back) == jg);
    CHECK(eq_ae_germ(back, g));
    CHECK(germ_norm(back) == germ_norm(g));

    CandidateGlobal cand = rand_candidate(rng);
    Json jc = candidate_to_json(cand);
    CandidateGlobal cback = candidate_from_json(jc, "$");
    CHECK(candidate_to_json(cback) == jc);
    CHECK(cback.value_at(rat(1, 3), rat(2, 7)) == cand.value_at(rat(1, 3), rat(2, 7)));
  }

  Set1D s({Interval::closed(0, rat(1, 4)), Interval::open(rat(1, 2), rat(3, 4))});
  CHECK(set1d_from_json(set1d_to_json(s), "$") == s);

  RawGermTable table;
  Figure2D seg = Figure2D::vseg(rat(1, 2), Interval::full());
  table.entries.push_back(GermTableEntry{seg, restrict_germ(coordinate_germ(), seg)});
  Json jt = table_to_json(table);
  CHECK(table_to_json(table_from_json(jt, "$")) == jt);

  CHECK(ext_rat_to_json(ExtRat::inf()) == Json("inf"));
  CHECK(ext_rat_to_json(ExtRat::of(rat(3, 2))) == Json("3/2"));
  CHECK(rat_from_json(rat_to_json(rat(-7, 3)), "$") == rat(-7, 3));
}

TEST_CASE("a hand-written germ file denotes the coordinate germ") {
  const char* text = R"({
    "vertical":   {"default": {"breaks": [], "pieces": [{"a0": "0", "a1": "0", "b0": "1", "b1": "0"}]}},
    "horizontal": {"default": {"breaks": [], "pieces": [{"a0": "0", "a1": "0", "b0": "1", "b1": "0"}]}}
  })";
  Germ g = germ_from_json(parse_json_text(text, "inline"), "$");
  CHECK(eq_ae_germ(g, coordinate_germ()));
  CHECK(germ_norm(g) == 1);
}

TEST_CASE("strict parsing reports the offending path") {
  auto path_of = [](auto&& fn) -> std::string {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.path;
    }
    return "";
  };

  CHECK(path_of([] { rat_from_json(Json("2/4"), "$.x"); }) == "$.x");
  CHECK(path_of([] { rat_from_json(Json(0.5), "$.x"); }) == "$.x");
  CHECK(path_of([] {
          interval_from_json(Json{{"lo", "-1/2"},
                                  {"hi", "1/2"},
                                  {"lo_closed", true},
                                  {"hi_closed", true}},
                             "$.iv");
        }) == "$.iv");

  try {
    interval_from_json(Json{{"lo", "0"},
                            {"hi", "1"},
                            {"lo_closed", true},
                            {"hi_closed", true},
                            {"extra", 1}},
                       "$.iv");
    FAIL("unknown field accepted");
  } catch (const ParseError& e) {
    CHECK(contains(e.what(), "extra"));
  }

  CHECK_THROWS_AS(interval_from_json(Json{{"lo", "0"}, {"hi", "1"}, {"lo_closed", true}}, "$"),
                  ParseError);
  CHECK_THROWS_AS(
      line_func_from_json(Json{{"breaks", Json::array({"1/2", "1/3"})},
                               {"pieces", Json::array({Json{{"a", "0"}, {"b", "0"}},
                                                       Json{{"a", "0"}, {"b", "0"}},
                                                       Json{{"a", "0"}, {"b", "0"}}})}},
                          "$"),
      ParseError);
  CHECK_THROWS_AS(simple_func_from_json(
                      Json{{"terms", Json::array({Json{{"coeff", "1.5"},
                                                       {"figure", figure_to_json(
                                                                      Figure2D::unit_square())}}})}},
                      "$"),
                  ParseError);

  Json germ_dup = germ_to_json(coordinate_germ());
  Json exc = Json{{"at", "1/2"}, {"fn", line_func_to_json(LineFunc::zero())}};
  germ_dup["vertical"]["exceptions"] = Json::array({exc, exc});
  CHECK_THROWS_AS(germ_from_json(germ_dup, "$"), ParseError);

  Json cand = candidate_to_json(CandidateGlobal::uniform(CellAffine{0, 0, 1}));
  cand["cells"].erase(0);
  CHECK_THROWS_AS(candidate_from_json(cand, "$"), ParseError);

  CHECK_THROWS_AS(parse_json_text("{", "broken.json"), ParseError);
  CHECK_THROWS_AS(read_text_file((scratch_dir() / "missing.json").string()), ParseError);
}

TEST_CASE("manifest envelope validation") {
  Json payload = germ_to_json(coordinate_germ());
  Json m = wrap_manifest("germ", payload);
  CHECK(m["schema_version"] == 1);
  CHECK(m["kind"] == "germ");
  CHECK(unwrap_manifest(m, "germ", "mem") == payload);
  CHECK_THROWS_AS(unwrap_manifest(m, "simple_func", "mem"), ParseError);

  Json wrong = m;
  wrong["schema_version"] = 2;
  CHECK_THROWS_AS(unwrap_manifest(wrong, "germ", "mem"), ParseError);

  Json missing = Json{{"schema_version", 1}, {"kind", "germ"}};
  CHECK_THROWS_AS(unwrap_manifest(missing, "germ", "mem"), ParseError);
}

TEST_CASE("cli demos print the rendered reports") {
  CliResult text = run_cli("demo dual-pairing");
  CHECK(text.code == 0);
  CHECK(text.out == render_text(demo_dual_pairing()));
  CHECK(contains(text.out, "Tf = 1/2"));
  CHECK(contains(text.out, "result: PASS"));

  CliResult json = run_cli("demo dual-pairing --json");
  CHECK(json.code == 0);
  CHECK(parse_json_text(json.out, "cli") == render_json(demo_dual_pairing()));

  CliResult rooted = run_cli("--json demo dual-pairing");
  CHECK(rooted.code == 0);
  CHECK(rooted.out == json.out);

  CliResult ds = run_cli("demo ds-remark");
  CHECK(ds.code == 0);
  CHECK(ds.out == render_text(demo_ds_remark()));
  CHECK(contains(ds.out, "result: PASS"));
}

TEST_CASE("cli norm attainment validates eps") {
  CliResult ok = run_cli("demo norm-attainment --eps 1/10");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "pairing: 19/20"));

  CHECK(run_cli("demo norm-attainment --eps 0/1").code == 2);
  CHECK(run_cli("demo norm-attainment --eps abc").code == 2);
  CHECK(run_cli("demo norm-attainment").code == 2);
}

TEST_CASE("cli axiom runs are reproducible") {
  CliResult a = run_cli("axioms --seed 7 --cases 20");
  CliResult b = run_cli("axioms --seed 7 --cases 20");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == render_text(run_axiom_suite(7, 20)));

  CliResult j = run_cli("axioms --seed 7 --cases 20 --json");
  CHECK(j.code == 0);
  CHECK(parse_json_text(j.out, "cli") == render_json(run_axiom_suite(7, 20)));
}

TEST_CASE("cli eval pairs files and reports the bound") {
  fs::path germ = write_manifest("germ.json", "germ", germ_to_json(coordinate_germ()));
  fs::path func = write_manifest(
      "func.json", "simple_func",
      simple_func_to_json(
          SimpleFunc::indicator(1, Figure2D::vseg(rat(1, 2), Interval::full()))));

  CliResult text = run_cli("eval --germ " + germ.string() + " --func " + func.string() +
                           " --measure grid");
  CHECK(text.code == 0);
  CHECK(contains(text.out, "pairing: 1/2"));
  CHECK(contains(text.out, "l1 norm: 1/1"));

  CliResult json = run_cli("eval --germ " + germ.string() + " --func " + func.string() +
                           " --measure grid --json");
  CHECK(json.code == 0);
  Json payload = parse_json_text(json.out, "cli");
  CHECK(payload["value"] == "1/2");
  CHECK(payload["l1"] == "1/1");
  CHECK(payload["bound_ok"] == true);

  // the same line has no weight under the lines measure
  CliResult lines = run_cli("eval --germ " + germ.string() + " --func " + func.string() +
                            " --measure lines");
  CHECK(lines.code == 0);
  CHECK(contains(lines.out, "pairing: 0/1"));

  fs::path fat = write_manifest(
      "fat.json", "simple_func",
      simple_func_to_json(SimpleFunc::indicator(1, Figure2D::unit_square())));
  CliResult infinite = run_cli("eval --germ " + germ.string() + " --func " + fat.string() +
                               " --measure grid");
  CHECK(infinite.code == 2);
  CHECK(contains(infinite.err, "error:"));

  CHECK(run_cli("eval --germ " + germ.string() + " --func " + func.string() +
                " --measure bogus")
            .code == 2);
}

TEST_CASE("cli germ-table checking distinguishes exit codes") {
  Figure2D seg = Figure2D::vseg(rat(1, 2), Interval::full());
  RawGermTable good;
  good.entries.push_back(GermTableEntry{seg, restrict_germ(coordinate_germ(), seg)});
  good.entries.push_back(GermTableEntry{
      Figure2D::hseg(Interval::full(), rat(1, 3)),
      restrict_germ(coordinate_germ(), Figure2D::hseg(Interval::full(), rat(1, 3)))});
  fs::path good_path = write_manifest("table_good.json", "germ_table", table_to_json(good));
  CliResult ok = run_cli("check-germ --table " + good_path.string());
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "consistent"));

  RawGermTable bad = good;
  RestrictedGerm lying;
  lying.vertical.emplace(rat(1, 2), LineFunc::zero());
  bad.entries.push_back(GermTableEntry{seg, lying});
  fs::path bad_path = write_manifest("table_bad.json", "germ_table", table_to_json(bad));
  CliResult conflict = run_cli("check-germ --table " + bad_path.string());
  CHECK(conflict.code == 1);
  CHECK(contains(conflict.out, "inconsistent"));
  CHECK(contains(conflict.out, "vertical"));
  CHECK(contains(conflict.out, "1/2"));
}

TEST_CASE("cli norm and error paths") {
  fs::path germ = write_manifest("germ_n.json", "germ", germ_to_json(coordinate_germ()));
  CliResult norm = run_cli("norm --germ " + germ.string());
  CHECK(norm.code == 0);
  CHECK(norm.out == "germ norm: 1/1\n");

  CliResult norm_json = run_cli("norm --germ " + germ.string() + " --json");
  CHECK(norm_json.code == 0);
  CHECK(parse_json_text(norm_json.out, "cli")["norm"] == "1/1");

  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("norm --germ " + (scratch_dir() / "absent.json").string()).code == 2);

  Json mangled = germ_to_json(coordinate_germ());
  mangled["vertical"]["default"]["pieces"][0]["b0"] = "2/4";
  fs::path bad = write_manifest("germ_bad.json", "germ", mangled);
  CliResult broken = run_cli("norm --germ " + bad.string());
  CHECK(broken.code == 2);
  CHECK(contains(broken.err, "error:"));

  CliResult help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(contains(help.out, "demo"));
}
