#include "linfinf/simple_fn.hpp"

#include <algorithm>

namespace linfinf {

Rat SimpleFunc::value_at(const Rat& x, const Rat& y) const {
  Rat v = 0;
  for (const Term& t : terms_) {
    if (t.figure.contains(x, y)) v += t.coeff;
  }
  return v;
}

SimpleFunc add_func(const SimpleFunc& f, const SimpleFunc& g) {
  std::vector<Term> terms = f.terms();
  terms.insert(terms.end(), g.terms().begin(), g.terms().end());
  return SimpleFunc(std::move(terms));
}

SimpleFunc scale_func(const Rat& c, const SimpleFunc& f) {
  if (c == 0) return SimpleFunc::zero();
  std::vector<Term> terms = f.terms();
  for (Term& t : terms) t.coeff *= c;
  return SimpleFunc(std::move(terms));
}

Figure2D support(const SimpleFunc& f) {
  std::vector<const Figure2D*> figs;
  for (const Term& t : f.terms()) figs.push_back(&t.figure);
  CellDecomposition d = CellDecomposition::over(figs);
  std::vector<std::pair<size_t, size_t>> keep;
  for (size_t j = 0; j < d.y().count(); ++j) {
    for (size_t i = 0; i < d.x().count(); ++i) {
      auto [px, py] = d.rep(i, j);
      if (f.value_at(px, py) != 0) keep.emplace_back(i, j);
    }
  }
  return cells_to_figure(d, keep);
}

ExtRat l1_norm(const SimpleFunc& f, MeasureKind kind) {
  CriticalLines cl = critical_lines(support(f));
  if (cl.has_area_box()) return ExtRat::inf();
  Rat total = 0;
  if (kind == MeasureKind::Grid) {
    for (const Rat& x : cl.vertical_points)
      total += step_abs_integral(restrict_line(f, Orientation::Vertical, x));
  }
  for (const Rat& y : cl.horizontal_points)
    total += step_abs_integral(restrict_line(f, Orientation::Horizontal, y));
  return ExtRat::of(total);
}

LineStep restrict_line(const SimpleFunc& f, Orientation o, const Rat& at) {
  std::vector<Rat> cuts{Rat(0), Rat(1)};
  for (const Term& t : f.terms()) {
    for (const Box& b : t.figure.boxes()) {
      const Interval& along = o == Orientation::Vertical ? b.y : b.x;
      const Interval& across = o == Orientation::Vertical ? b.x : b.y;
      if (!across.contains(at)) continue;
      cuts.push_back(along.lo());
      cuts.push_back(along.hi());
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto eval = [&](const Rat& t) {
    return o == Orientation::Vertical ? f.value_at(at, t) : f.value_at(t, at);
  };
  LineStep s;
  s.cuts = cuts;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    s.open_values.push_back(eval((cuts[i] + cuts[i + 1]) / 2));
  for (const Rat& c : cuts) s.point_values.push_back(eval(c));
  return s;
}

}  // namespace linfinf
