#include "linfinf/demos.hpp"

#include "linfinf/random_gen.hpp"

#include <sstream>
#include <utility>

namespace linfinf {

namespace {

std::string func_str(const SimpleFunc& f) {
  if (f.terms().empty()) return "0";
  std::string out;
  for (size_t i = 0; i < f.terms().size(); ++i) {
    if (i) out += " + ";
    out += rat_str(f.terms()[i].coeff) + " on " + f.terms()[i].figure.str();
  }
  return out;
}

const char* verdict_word(bool ok) { return ok ? "ok" : "FAIL"; }

}  // namespace

bool DualPairingReport::ok() const {
  for (const PairingCase& c : cases) {
    if (!c.bound_ok) return false;
  }
  return !cases.empty();
}

DualPairingReport demo_dual_pairing() {
  Germ g = coordinate_germ();
  DualPairingReport r;
  r.norm = germ_norm(g);

  auto run = [&](std::string label, SimpleFunc f) {
    PairingCase c;
    c.label = std::move(label);
    c.l1 = l1_norm(f, MeasureKind::Grid);
    c.value = pairing(g, f, MeasureKind::Grid);
    c.bound_ok = c.l1.is_finite && rat_abs(c.value) <= r.norm * c.l1.value;
    c.f = std::move(f);
    r.cases.push_back(std::move(c));
  };

  run("f = 1 on the vertical segment {1/2} x [0,1]",
      SimpleFunc::indicator(1, Figure2D::vseg(rat(1, 2), Interval::full())));
  run("f = 1 on the cross {1/2} x [0,1] u [0,1] x {1/3}",
      SimpleFunc(
          {Term{1, Figure2D({Box{Interval::point(rat(1, 2)), Interval::full()},
                             Box{Interval::full(), Interval::point(rat(1, 3))}})}}));
  run("f = 10 on {1/2} x [9/10,1]",
      SimpleFunc::indicator(10, Figure2D::vseg(rat(1, 2), Interval::closed(rat(9, 10), 1))));
  return r;
}

bool NormAttainmentReport::ok() const {
  return l1 == ExtRat::of(1) && rat_abs(value) >= norm - eps;
}

NormAttainmentReport demo_norm_attainment(const Rat& eps) {
  Germ g = coordinate_germ();
  NormAttainmentReport r;
  r.eps = eps;
  r.norm = germ_norm(g);
  r.witness = norm_witness(g, eps, MeasureKind::Grid);
  r.l1 = l1_norm(r.witness, MeasureKind::Grid);
  r.value = pairing(g, r.witness, MeasureKind::Grid);
  return r;
}

std::vector<CandidateGlobal> full_battery(std::uint64_t seed, size_t extra) {
  std::vector<CandidateGlobal> battery = standard_battery();
  Rng rng(seed);
  for (size_t k = 0; k < extra; ++k) battery.push_back(rand_candidate(rng));
  return battery;
}

NonRepresentableReport demo_non_representable(std::uint64_t seed, size_t extra) {
  NonRepresentableReport r;
  r.seed = seed;
  r.battery = full_battery(seed, extra);
  r.battery_size = r.battery.size();
  r.report = exhaustive_nonrepresentability(coordinate_germ(), r.battery);
  return r;
}

bool DsRemarkReport::ok() const {
  for (const DsPartItem& p : parts) {
    if (!p.in_field || !(p.mu == ExtRat::of(1))) return false;
  }
  if (!star.all_pass) return false;
  if (!double_star_witness || *double_star_witness != strip_index) return false;
  if (!patch_coherent) return false;
  return measurability.has_value();
}

DsRemarkReport demo_ds_remark() {
  DsRemarkReport r{.germ = Germ(LineRule::zero(), LineRule::coordinate()),
                   .parts = {},
                   .battery = {},
                   .strip_index = 0,
                   .star = {},
                   .double_star_witness = std::nullopt,
                   .patched = CandidateGlobal::uniform(CellAffine{0, 0, 0}),
                   .patch_coherent = true,
                   .measurability = std::nullopt};
  Decomposition d;
  SigmaFieldModel field{SigmaFieldKind::CountableHorizontalLines};

  for (const Rat& y : {rat(0), rat(1, 3), rat(1, 2), rat(1)}) {
    Figure2D part = Decomposition::part(y);
    r.parts.push_back(DsPartItem{y, member(field, part), mu_lines(part)});
  }

  // Field members first, then the strip: the first set whose slices are all
  // members while the set itself is not must be the strip.
  r.battery = {
      Figure2D::hseg(Interval::full(), rat(1, 2)),
      Figure2D::hseg(Interval::closed(0, rat(1, 2)), rat(1, 3)),
      figure_union(Figure2D::hseg(Interval::full(), rat(1, 4)),
                   Figure2D::hseg(Interval::full(), rat(3, 4))),
      Figure2D({Box{Interval::point(rat(1, 4)), Interval::point(rat(1, 4))}}),
      Figure2D::unit_square(),
      Figure2D({Box{Interval::closed(0, rat(1, 2)), Interval::full()}}),
      Figure2D::vseg(rat(1, 4), Interval::full()),
      figure_union(Figure2D::vseg(rat(1, 2), Interval::full()),
                   Figure2D::hseg(Interval::full(), rat(1, 3))),
  };
  r.strip_index = 5;

  r.star = check_star(d, MeasureKind::Lines, r.battery);
  r.double_star_witness = check_double_star(d, field, r.battery);
  r.patched = patch_global(r.germ, d);
  Set1D whole({Interval::full()});
  for (const DsPartItem& p : r.parts) {
    RestrictedGerm part_fn = restrict_germ(r.germ, Decomposition::part(p.y));
    auto it = part_fn.horizontal.find(p.y);
    if (it == part_fn.horizontal.end() ||
        !eq_ae_line(r.patched.trace(Orientation::Horizontal, p.y), it->second, whole)) {
      r.patch_coherent = false;
    }
  }
  r.measurability = measurable_witness(r.patched, field);
  return r;
}

size_t AxiomSuiteReport::failures() const {
  size_t n = 0;
  for (const AxiomItem& item : items) n += item.failures;
  return n;
}

namespace {

// The same germ with a redundant exception: a fresh line carrying exactly the
// rule's instantiation there. A different representation of the same class.
Germ with_redundant_exception(const Germ& g, Orientation o) {
  std::set<Rat> used;
  for (const auto& [at, fn] : g.exceptions(o)) used.insert(at);
  Rat fresh = smallest_denominator_in(0, 1, used);
  LineMap vexc = g.exceptions(Orientation::Vertical);
  LineMap hexc = g.exceptions(Orientation::Horizontal);
  (o == Orientation::Vertical ? vexc : hexc).emplace(fresh, g.rule(o).at_line(fresh));
  return Germ(g.rule(Orientation::Vertical), g.rule(Orientation::Horizontal),
              std::move(vexc), std::move(hexc));
}

}  // namespace

AxiomSuiteReport run_axiom_suite(std::uint64_t seed, size_t cases) {
  AxiomSuiteReport r;
  r.seed = seed;
  r.cases = cases;
  r.items = {
      {"norm zero iff zero class", 0}, {"norm absolutely homogeneous", 0},
      {"norm triangle inequality", 0}, {"addition commutes", 0},
      {"addition associates", 0},      {"zero is the identity", 0},
      {"negation inverts", 0},         {"scalar distributes over sums", 0},
      {"scalar sum distributes", 0},   {"scalar action associates", 0},
      {"one acts as identity", 0},     {"operations respect equivalence", 0},
  };
  Germ zero = Germ::zero();
  Rng rng(seed);
  for (size_t k = 0; k < cases; ++k) {
    Germ g = rand_germ(rng);
    Germ h = rand_germ(rng);
    Germ w = rand_germ(rng);
    Rat c = rand_coeff(rng);
    Rat d = rand_coeff(rng);

    auto tally = [&](size_t law, bool pass) {
      if (!pass) ++r.items[law].failures;
    };
    tally(0, (germ_norm(g) == 0) == eq_ae_germ(g, zero));
    tally(0, germ_norm(scale_germ(0, g)) == 0);
    tally(1, germ_norm(scale_germ(c, g)) == rat_abs(c) * germ_norm(g));
    tally(2, germ_norm(add_germ(g, h)) <= germ_norm(g) + germ_norm(h));
    tally(3, eq_ae_germ(add_germ(g, h), add_germ(h, g)));
    tally(4, eq_ae_germ(add_germ(add_germ(g, h), w), add_germ(g, add_germ(h, w))));
    tally(5, eq_ae_germ(add_germ(g, zero), g));
    tally(5, eq_ae_germ(scale_germ(0, g), zero));
    tally(6, eq_ae_germ(add_germ(g, scale_germ(-1, g)), zero));
    tally(7, eq_ae_germ(scale_germ(c, add_germ(g, h)),
                        add_germ(scale_germ(c, g), scale_germ(c, h))));
    tally(8, eq_ae_germ(scale_germ(c + d, g),
                        add_germ(scale_germ(c, g), scale_germ(d, g))));
    tally(9, eq_ae_germ(scale_germ(c, scale_germ(d, g)), scale_germ(c * d, g)));
    tally(10, eq_ae_germ(scale_germ(1, g), g));

    Germ g2 = with_redundant_exception(g, Orientation::Vertical);
    Germ h2 = with_redundant_exception(h, Orientation::Horizontal);
    tally(11, eq_ae_germ(g2, g));
    tally(11, eq_ae_germ(h2, h));
    tally(11, eq_ae_germ(add_germ(g2, h2), add_germ(g, h)));
    tally(11, eq_ae_germ(scale_germ(c, g2), scale_germ(c, g)));
    tally(11, germ_norm(g2) == germ_norm(g));
  }
  return r;
}

std::string render_text(const DualPairingReport& r) {
  std::ostringstream out;
  out << "Duality pairing under the grid measure\n";
  out << "functional: Tf = sum_x int f(x,y) y dy + sum_y int f(x,y) x dx\n";
  out << "germ norm: " << rat_str(r.norm) << "\n";
  for (const PairingCase& c : r.cases) {
    out << "\n" << c.label << "\n";
    out << "  l1 norm: " << c.l1.str() << "\n";
    out << "  Tf = " << rat_str(c.value) << "\n";
    out << "  bound |Tf| <= norm * l1: " << verdict_word(c.bound_ok) << "\n";
  }
  out << "\nresult: " << (r.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_text(const NormAttainmentReport& r) {
  std::ostringstream out;
  out << "Norm attainment within eps = " << rat_str(r.eps) << "\n";
  out << "germ norm: " << rat_str(r.norm) << "\n";
  out << "witness f = " << func_str(r.witness) << "\n";
  out << "l1 norm: " << r.l1.str() << "\n";
  out << "pairing: " << rat_str(r.value) << "\n";
  out << "|pairing| >= norm - eps: " << verdict_word(rat_abs(r.value) >= r.norm - r.eps)
      << "\n";
  out << "\nresult: " << (r.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_text(const NonRepresentableReport& r) {
  std::ostringstream out;
  out << "No measurable function represents the coordinate germ\n";
  out << "battery: " << r.battery_size << " candidates (seed " << r.seed << ")\n\n";
  for (const NonReprEntry& e : r.report.entries) {
    out << "candidate " << e.index << ": ";
    if (!e.verdict.witness) {
      out << "NO WITNESS\n";
      continue;
    }
    const ReprWitness& w = *e.verdict.witness;
    out << "differs on the " << orientation_name(w.orientation)
        << " line at " << rat_str(w.line) << " over " << w.where.str()
        << (e.verified ? "" : " (UNVERIFIED)") << "\n";
  }
  out << "\nall candidates witnessed: " << verdict_word(r.report.all_witnessed) << "\n";
  out << "\nresult: " << (r.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_text(const DsRemarkReport& r) {
  std::ostringstream out;
  out << "Lines measure mu(A) = sum_y lambda(A_y^h) on the square,\n";
  out << "decomposed into the horizontal lines Omega_y, with the field of\n";
  out << "sets A where A or its complement lies within countably many lines.\n";
  out << "functional: Tf = sum_y int f(x,y) x dx\n\n";
  for (const DsPartItem& p : r.parts) {
    out << "part Omega_" << rat_str(p.y) << ": member " << verdict_word(p.in_field)
        << ", mu = " << p.mu.str() << "\n";
  }
  out << "\nnull-lifting condition (*) over " << r.battery.size() << " sets: "
      << (r.star.all_pass ? "all pass" : "FAIL") << "\n";
  out << "slicewise-membership condition (**): ";
  if (r.double_star_witness) {
    out << "fails at candidate " << *r.double_star_witness << " = "
        << r.battery[*r.double_star_witness].str() << "\n";
  } else {
    out << "holds on the battery\n";
  }
  out << "patched global function from the germ: g(x,y) = "
      << (r.patch_coherent ? "x (coherent with every part)" : "INCOHERENT") << "\n";
  out << "measurability of the patched function: ";
  if (r.measurability) {
    out << "fails at threshold " << rat_str(r.measurability->threshold)
        << "\n  level set " << r.measurability->set.str() << " is outside the field\n";
  } else {
    out << "no witness found\n";
  }
  out << "\nresult: " << (r.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_text(const AxiomSuiteReport& r) {
  std::ostringstream out;
  out << "Germ-space axiom suite: " << r.cases << " cases, seed " << r.seed << "\n\n";
  for (const AxiomItem& item : r.items) {
    out << "  " << item.law << ": "
        << (item.failures == 0 ? "pass" : std::to_string(item.failures) + " failures")
        << "\n";
  }
  out << "\nresult: " << (r.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

Json render_json(const DualPairingReport& r) {
  Json cases = Json::array();
  for (const PairingCase& c : r.cases) {
    cases.push_back(Json{{"label", c.label},
                         {"f", simple_func_to_json(c.f)},
                         {"l1", ext_rat_to_json(c.l1)},
                         {"value", rat_to_json(c.value)},
                         {"bound_ok", c.bound_ok}});
  }
  return Json{{"demo", "dual-pairing"},
              {"norm", rat_to_json(r.norm)},
              {"cases", std::move(cases)},
              {"pass", r.ok()}};
}

Json render_json(const NormAttainmentReport& r) {
  return Json{{"demo", "norm-attainment"},
              {"eps", rat_to_json(r.eps)},
              {"norm", rat_to_json(r.norm)},
              {"witness", simple_func_to_json(r.witness)},
              {"l1", ext_rat_to_json(r.l1)},
              {"value", rat_to_json(r.value)},
              {"pass", r.ok()}};
}

Json render_json(const NonRepresentableReport& r) {
  Json entries = Json::array();
  for (const NonReprEntry& e : r.report.entries) {
    Json item{{"candidate", e.index}, {"verified", e.verified}};
    if (e.verdict.witness) {
      const ReprWitness& w = *e.verdict.witness;
      item["witness"] = Json{{"orientation", orientation_name(w.orientation)},
                             {"line", rat_to_json(w.line)},
                             {"where", interval_to_json(w.where)},
                             {"set", figure_to_json(w.set)}};
    }
    entries.push_back(std::move(item));
  }
  return Json{{"demo", "non-representable"},
              {"seed", r.seed},
              {"battery_size", r.battery_size},
              {"entries", std::move(entries)},
              {"pass", r.ok()}};
}

Json render_json(const DsRemarkReport& r) {
  Json parts = Json::array();
  for (const DsPartItem& p : r.parts) {
    parts.push_back(Json{{"y", rat_to_json(p.y)},
                         {"member", p.in_field},
                         {"mu", ext_rat_to_json(p.mu)}});
  }
  Json out{{"demo", "ds-remark"},
           {"parts", std::move(parts)},
           {"star_all_pass", r.star.all_pass},
           {"patched", candidate_to_json(r.patched)},
           {"patch_coherent", r.patch_coherent},
           {"pass", r.ok()}};
  if (r.double_star_witness) {
    out["double_star_witness"] =
        Json{{"index", *r.double_star_witness},
             {"set", figure_to_json(r.battery[*r.double_star_witness])}};
  }
  if (r.measurability) {
    out["measurability_witness"] =
        Json{{"threshold", rat_to_json(r.measurability->threshold)},
             {"set", figure_to_json(r.measurability->set)}};
  }
  return out;
}

Json render_json(const AxiomSuiteReport& r) {
  Json items = Json::array();
  for (const AxiomItem& item : r.items) {
    items.push_back(Json{{"law", item.law}, {"failures", item.failures}});
  }
  return Json{{"demo", "axioms"},
              {"seed", r.seed},
              {"cases", r.cases},
              {"laws", std::move(items)},
              {"pass", r.ok()}};
}

}  // namespace linfinf
