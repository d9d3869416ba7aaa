#include "linfinf/decomposable.hpp"

#include "linfinf/errors.hpp"

#include <algorithm>

namespace linfinf {

namespace {

// A lies within finitely many horizontal lines iff no box has positive height.
bool within_horizontal_lines(const Figure2D& a) {
  return std::all_of(a.boxes().begin(), a.boxes().end(),
                     [](const Box& b) { return b.y.is_point(); });
}

}  // namespace

bool member(const SigmaFieldModel& m, const Figure2D& a) {
  if (m.kind == SigmaFieldKind::AllFigures) return true;
  return within_horizontal_lines(a) || within_horizontal_lines(figure_complement(a));
}

StarReport check_star(const Decomposition& d, MeasureKind kind,
                      const std::vector<Figure2D>& battery) {
  StarReport report;
  for (size_t idx = 0; idx < battery.size(); ++idx) {
    const Figure2D& a = battery[idx];
    CriticalLines cl = critical_lines(a);
    // μ(A ∩ Ω_y) = λ(A_y^h); positive slices occur exactly on the horizontal
    // critical content.
    bool premise =
        cl.horizontal_points.empty() && cl.horizontal_intervals.is_empty();
    // Instantiate the slices the figure can see and re-derive the premise
    // honestly rather than trusting the classification alone.
    for (const Rat& y : cl.horizontal_points) {
      ExtRat slice = measure_of(figure_intersect(a, d.part(y)), kind);
      if (!(slice == ExtRat::of(Rat(0)))) premise = false;
    }
    ExtRat mu = measure_of(a, kind);
    bool pass = !premise || mu == ExtRat::of(Rat(0));
    report.items.push_back(StarItem{idx, premise, mu, pass});
    if (!pass) report.all_pass = false;
  }
  return report;
}

std::optional<size_t> check_double_star(const Decomposition& d, const SigmaFieldModel& m,
                                        const std::vector<Figure2D>& battery) {
  for (size_t idx = 0; idx < battery.size(); ++idx) {
    const Figure2D& a = battery[idx];
    // Premise: every slice is in the field. Slices lie within a single line,
    // so this holds; verify on the critical lines plus a generic one.
    CriticalLines cl = critical_lines(a);
    std::vector<Rat> probes = cl.horizontal_points;
    probes.push_back(rat(1, 2));
    bool premise = true;
    for (const Rat& y : probes) {
      if (!member(m, figure_intersect(a, d.part(y)))) premise = false;
    }
    if (premise && !member(m, a)) return idx;
  }
  return std::nullopt;
}

PatchedFunction patch_global(const Germ& g, const Decomposition&) {
  const LineRule& rule = g.rule(Orientation::Horizontal);
  for (const RulePiece& p : rule.pieces()) {
    if (p.b1 != 0)
      throw Unsupported("patched value would carry an x*y cross term");
  }
  // Cells split along x at the rule's breaks; the value on a piece is
  // a0 + a1*s + b0*t with s = y and t = x, i.e. (a, b, c) = (a0, b0, a1).
  std::vector<Rat> xvals = rule.breaks();
  AxisAtoms xa = AxisAtoms::from_values(std::move(xvals));
  AxisAtoms ya = AxisAtoms::from_values({});
  std::vector<std::vector<CellAffine>> cells;
  std::vector<CellAffine> row;
  for (size_t i = 0; i < xa.count(); ++i) {
    Rat probe = xa.representative(i);
    size_t k = static_cast<size_t>(
        std::upper_bound(rule.breaks().begin(), rule.breaks().end(), probe) -
        rule.breaks().begin());
    const RulePiece& p = rule.pieces()[k];
    row.push_back(CellAffine{p.a0, p.b0, p.a1});
  }
  for (size_t j = 0; j < ya.count(); ++j) cells.push_back(row);
  return PatchedFunction(std::move(xa), std::move(ya), std::move(cells), {},
                         g.exceptions(Orientation::Horizontal));
}

namespace {

void cell_superlevel(const CandidateGlobal& g, size_t i, size_t j, const Rat& q,
                     std::vector<Box>& out) {
  const CellAffine& c = g.cell(i, j);
  if (c.b != 0 && c.c != 0)
    throw Unsupported("cell value depends on both coordinates");
  Interval xi = g.xatoms().atom(i);
  Interval yi = g.yatoms().atom(j);
  if (c.b == 0 && c.c == 0) {
    if (c.a > q) out.push_back(Box{xi, yi});
    return;
  }
  bool along_x = c.b != 0;
  const Interval& dom = along_x ? xi : yi;
  Rat slope = along_x ? c.b : c.c;
  Rat root = (q - c.a) / slope;
  Boundary s = dom.start(), e = dom.end();
  if (slope > 0) {
    Boundary cut{root, Boundary::kAbove};
    if (s < cut) s = cut;
  } else {
    Boundary cut{root, Boundary::kBelow};
    if (cut < e) e = cut;
  }
  auto iv = Interval::from_boundaries(s, e);
  if (!iv) return;
  out.push_back(along_x ? Box{*iv, yi} : Box{xi, *iv});
}

}  // namespace

std::optional<MeasurabilityWitness> measurable_witness(const PatchedFunction& g,
                                                       const SigmaFieldModel& m) {
  // Candidate thresholds: endpoint values of every cell's affine range.
  std::vector<Rat> vals;
  for (size_t j = 0; j < g.yatoms().count(); ++j) {
    for (size_t i = 0; i < g.xatoms().count(); ++i) {
      const CellAffine& c = g.cell(i, j);
      if (c.b != 0 && c.c != 0)
        throw Unsupported("cell value depends on both coordinates");
      Interval xi = g.xatoms().atom(i);
      Interval yi = g.yatoms().atom(j);
      vals.push_back(c.at(xi.lo(), yi.lo()));
      vals.push_back(c.at(xi.hi(), yi.hi()));
    }
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<Rat> thresholds;
  for (size_t k = 0; k + 1 < vals.size(); ++k)
    thresholds.push_back((vals[k] + vals[k + 1]) / 2);
  thresholds.insert(thresholds.end(), vals.begin(), vals.end());

  for (const Rat& q : thresholds) {
    std::vector<Box> boxes;
    for (size_t j = 0; j < g.yatoms().count(); ++j) {
      for (size_t i = 0; i < g.xatoms().count(); ++i) cell_superlevel(g, i, j, q, boxes);
    }
    Figure2D level(std::move(boxes));
    // Overrides replace the cell values on their lines.
    std::vector<Box> masks, replacements;
    for (const auto& [x, fn] : g.overrides(Orientation::Vertical)) {
      masks.push_back(Box{Interval::point(x), Interval::full()});
      for (const Interval& iv : superlevel_gt_exact(fn, q).components())
        replacements.push_back(Box{Interval::point(x), iv});
    }
    for (const auto& [y, fn] : g.overrides(Orientation::Horizontal)) {
      masks.push_back(Box{Interval::full(), Interval::point(y)});
      for (const Interval& iv : superlevel_gt_exact(fn, q).components())
        replacements.push_back(Box{iv, Interval::point(y)});
    }
    if (!masks.empty()) {
      level = figure_union(figure_diff(level, Figure2D(std::move(masks))),
                           Figure2D(std::move(replacements)));
    }
    if (!member(m, level)) return MeasurabilityWitness{level, q};
  }
  return std::nullopt;
}

CountabilityReport countability_check(const SigmaFieldModel& m, MeasureKind kind,
                                      const std::vector<Figure2D>& battery) {
  CountabilityReport report;
  for (size_t idx = 0; idx < battery.size(); ++idx) {
    const Figure2D& a = battery[idx];
    bool in_field = member(m, a);
    bool finite = measure_of(a, kind).is_finite;
    bool lines = within_horizontal_lines(a);
    bool pass = !(in_field && finite) || lines;
    report.items.push_back(CountabilityItem{idx, in_field, finite, lines, pass});
    if (!pass) report.all_pass = false;
  }
  return report;
}

}  // namespace linfinf
