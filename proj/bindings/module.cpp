#include "linfinf/demos.hpp"
#include "linfinf/serialize.hpp"

#include <pybind11/pybind11.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace py = pybind11;

namespace {

using namespace linfinf;

// The Python surface speaks JSON strings and exact rational strings; no
// floats cross the boundary.
Germ germ_of(const std::string& text) {
  return germ_from_json(parse_json_text(text, "germ"), "$");
}

SimpleFunc func_of(const std::string& text) {
  return simple_func_from_json(parse_json_text(text, "func"), "$");
}

Figure2D figure_of(const std::string& text) {
  return figure_from_json(parse_json_text(text, "figure"), "$");
}

CandidateGlobal candidate_of(const std::string& text) {
  return candidate_from_json(parse_json_text(text, "candidate"), "$");
}

MeasureKind kind_of(const std::string& name) {
  if (name == "grid") return MeasureKind::Grid;
  if (name == "lines") return MeasureKind::Lines;
  throw std::invalid_argument("measure must be 'grid' or 'lines'");
}

Rat rat_of(const std::string& text) {
  auto r = parse_rat(text);
  if (!r) throw std::invalid_argument("malformed rational '" + text + "'");
  return *r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact line-sum duality toolkit; values cross as JSON or p/q strings";

  m.def("coordinate_germ", [] { return germ_to_json(coordinate_germ()).dump(); },
        "the germ whose weight on every line is the coordinate along it");
  m.def("germ_norm",
        [](const std::string& germ) { return rat_str(germ_norm(germ_of(germ))); },
        py::arg("germ"));
  m.def("pairing",
        [](const std::string& germ, const std::string& func, const std::string& measure) {
          return rat_str(pairing(germ_of(germ), func_of(func), kind_of(measure)));
        },
        py::arg("germ"), py::arg("func"), py::arg("measure"));
  m.def("l1_norm",
        [](const std::string& func, const std::string& measure) {
          return l1_norm(func_of(func), kind_of(measure)).str();
        },
        py::arg("func"), py::arg("measure"));
  m.def("norm_witness",
        [](const std::string& germ, const std::string& eps, const std::string& measure) {
          return simple_func_to_json(norm_witness(germ_of(germ), rat_of(eps), kind_of(measure)))
              .dump();
        },
        py::arg("germ"), py::arg("eps"), py::arg("measure"));
  m.def("measure_of",
        [](const std::string& figure, const std::string& measure) {
          return measure_of(figure_of(figure), kind_of(measure)).str();
        },
        py::arg("figure"), py::arg("measure"));
  m.def("sigma_finite",
        [](const std::string& figure) { return sigma_finite(figure_of(figure)); },
        py::arg("figure"));
  m.def("restrict_germ",
        [](const std::string& germ, const std::string& figure) {
          return restricted_germ_to_json(restrict_germ(germ_of(germ), figure_of(figure))).dump();
        },
        py::arg("germ"), py::arg("figure"));
  m.def("represents",
        [](const std::string& candidate, const std::string& germ) {
          ReprVerdict v = represents(candidate_of(candidate), germ_of(germ));
          Json out{{"represents", v.represents()}};
          if (v.witness) {
            out["witness"] = Json{{"orientation", orientation_name(v.witness->orientation)},
                                  {"line", rat_to_json(v.witness->line)},
                                  {"where", interval_to_json(v.witness->where)},
                                  {"set", figure_to_json(v.witness->set)}};
          }
          return out.dump();
        },
        py::arg("candidate"), py::arg("germ"));
  m.def("field_member",
        [](const std::string& figure) {
          return member(SigmaFieldModel{SigmaFieldKind::CountableHorizontalLines},
                        figure_of(figure));
        },
        py::arg("figure"),
        "membership in the field of sets within countably many horizontal lines");
  m.def("patch_global",
        [](const std::string& germ) {
          return candidate_to_json(patch_global(germ_of(germ), Decomposition{})).dump();
        },
        py::arg("germ"));
  m.def("measurable_witness",
        [](const std::string& candidate) -> py::object {
          auto w = measurable_witness(candidate_of(candidate),
                                      SigmaFieldModel{SigmaFieldKind::CountableHorizontalLines});
          if (!w) return py::none();
          return py::str(Json{{"threshold", rat_to_json(w->threshold)},
                              {"set", figure_to_json(w->set)}}
                             .dump());
        },
        py::arg("candidate"));
  m.def("demo_dual_pairing", [] { return render_json(demo_dual_pairing()).dump(); });
  m.def("demo_norm_attainment",
        [](const std::string& eps) { return render_json(demo_norm_attainment(rat_of(eps))).dump(); },
        py::arg("eps"));
  m.def("demo_ds_remark", [] { return render_json(demo_ds_remark()).dump(); });
  m.def("run_axioms",
        [](std::uint64_t seed, std::size_t cases) {
          return render_json(run_axiom_suite(seed, cases)).dump();
        },
        py::arg("seed") = kDefaultSeed, py::arg("cases") = std::size_t{100});
}
