#include "linfinf/demos.hpp"
#include "linfinf/serialize.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace linfinf;

void print(bool json, const Json& payload, const std::string& text) {
  if (json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

template <class Report>
int emit_report(bool json, const Report& r) {
  if (json)
    std::cout << render_json(r).dump(2) << "\n";
  else
    std::cout << render_text(r);
  return r.ok() ? 0 : 1;
}

int run_eval(bool json, const std::string& germ_path, const std::string& func_path,
             MeasureKind kind) {
  Germ g = germ_from_json(load_manifest_payload(germ_path, "germ"), "$");
  SimpleFunc f = simple_func_from_json(load_manifest_payload(func_path, "simple_func"), "$");
  ExtRat l1 = l1_norm(f, kind);
  Rat value = pairing(g, f, kind);
  Rat norm = attainable_norm(g, kind);
  bool bound_ok = l1.is_finite && rat_abs(value) <= norm * l1.value;
  std::ostringstream text;
  const char* name = kind == MeasureKind::Grid ? "grid" : "lines";
  text << "measure: " << name << "\n"
       << "l1 norm: " << l1.str() << "\n"
       << "pairing: " << rat_str(value) << "\n"
       << "attainable norm: " << rat_str(norm) << "\n"
       << "bound |Tf| <= norm * l1: " << (bound_ok ? "ok" : "FAIL") << "\n";
  print(json,
        Json{{"measure", name},
             {"l1", ext_rat_to_json(l1)},
             {"value", rat_to_json(value)},
             {"attainable_norm", rat_to_json(norm)},
             {"bound_ok", bound_ok}},
        text.str());
  return bound_ok ? 0 : 1;
}

int run_check_germ(bool json, const std::string& table_path) {
  RawGermTable table = table_from_json(load_manifest_payload(table_path, "germ_table"), "$");
  auto witness = consistency_check(table);
  if (!witness) {
    print(json, Json{{"consistent", true}, {"entries", table.entries.size()}},
          "consistent: " + std::to_string(table.entries.size()) + " entries agree a.e. on every shared line\n");
    return 0;
  }
  std::ostringstream text;
  text << "inconsistent: entries " << witness->i << " and " << witness->j
       << " disagree on the " << orientation_name(witness->orientation) << " line at "
       << rat_str(witness->line) << " over " << witness->where.str() << "\n";
  print(json,
        Json{{"consistent", false},
             {"witness",
              Json{{"i", witness->i},
                   {"j", witness->j},
                   {"orientation", orientation_name(witness->orientation)},
                   {"line", rat_to_json(witness->line)},
                   {"where", interval_to_json(witness->where)}}}},
        text.str());
  return 1;
}

int run_norm(bool json, const std::string& germ_path) {
  Germ g = germ_from_json(load_manifest_payload(germ_path, "germ"), "$");
  Rat norm = germ_norm(g);
  print(json, Json{{"norm", rat_to_json(norm)}}, "germ norm: " + rat_str(norm) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact line-sum duality toolkit for the unit square"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit machine-readable JSON instead of text");

  auto* demo = app.add_subcommand("demo", "run a built-in demonstration");
  demo->require_subcommand(1);
  demo->fallthrough();
  auto* demo_dual = demo->add_subcommand(
      "dual-pairing", "worked pairings of the coordinate germ under the grid measure");
  demo_dual->fallthrough();
  auto* demo_attain =
      demo->add_subcommand("norm-attainment", "a unit-norm f pairing within eps of the norm");
  demo_attain->fallthrough();
  std::string eps_text;
  demo_attain->add_option("--eps", eps_text, "attainment slack, a positive rational p/q")
      ->required();
  auto* demo_nonrep = demo->add_subcommand(
      "non-representable", "a disagreement witness against every candidate global function");
  demo_nonrep->fallthrough();
  auto* demo_ds = demo->add_subcommand(
      "ds-remark", "decomposition conditions and the patched function's measurability failure");
  demo_ds->fallthrough();

  std::string germ_path, func_path, table_path, measure_name;
  auto* eval = app.add_subcommand("eval", "pair a germ file with a simple-function file");
  eval->fallthrough();
  eval->add_option("--germ", germ_path, "germ manifest file")->required();
  eval->add_option("--func", func_path, "simple-function manifest file")->required();
  eval->add_option("--measure", measure_name, "grid | lines")
      ->required()
      ->check(CLI::IsMember({"grid", "lines"}));

  auto* check = app.add_subcommand("check-germ", "consistency of a raw germ table file");
  check->fallthrough();
  check->add_option("--table", table_path, "germ-table manifest file")->required();

  auto* norm_cmd = app.add_subcommand("norm", "norm of a germ file");
  norm_cmd->fallthrough();
  norm_cmd->add_option("--germ", germ_path, "germ manifest file")->required();

  std::uint64_t seed = linfinf::kDefaultSeed;
  std::uint64_t cases = 500;
  auto* axioms = app.add_subcommand("axioms", "seeded germ-space axiom suite");
  axioms->fallthrough();
  axioms->add_option("--seed", seed, "rng seed (default 1729)");
  axioms->add_option("--cases", cases, "random cases per law (default 500)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(demo)) {
      if (demo->got_subcommand(demo_dual)) return emit_report(json, demo_dual_pairing());
      if (demo->got_subcommand(demo_attain)) {
        auto eps = parse_rat(eps_text);
        if (!eps) throw ParseError("--eps", "malformed rational '" + eps_text + "'");
        return emit_report(json, demo_norm_attainment(*eps));
      }
      if (demo->got_subcommand(demo_nonrep)) return emit_report(json, demo_non_representable());
      if (demo->got_subcommand(demo_ds)) return emit_report(json, demo_ds_remark());
    }
    if (app.got_subcommand(eval)) {
      MeasureKind kind = measure_name == "grid" ? MeasureKind::Grid : MeasureKind::Lines;
      return run_eval(json, germ_path, func_path, kind);
    }
    if (app.got_subcommand(check)) return run_check_germ(json, table_path);
    if (app.got_subcommand(norm_cmd)) return run_norm(json, germ_path);
    if (app.got_subcommand(axioms))
      return emit_report(json, linfinf::run_axiom_suite(seed, static_cast<size_t>(cases)));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
