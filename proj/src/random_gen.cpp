#include "linfinf/random_gen.hpp"

#include <algorithm>
#include <set>

namespace linfinf {

Rat rand_unit_rat(Rng& rng, int max_den) {
  long long den = rng.range(1, max_den);
  long long num = rng.range(0, den);
  return Rat(num, den);  // cpp_rational reduces
}

Rat rand_coeff(Rng& rng) {
  long long den = rng.range(1, 4);
  long long num = rng.range(-2 * den, 2 * den);
  return Rat(num, den);
}

Interval rand_interval(Rng& rng) {
  Rat a = rand_unit_rat(rng);
  if (rng.below(5) == 0) return Interval::point(a);
  Rat b = rand_unit_rat(rng);
  while (b == a) b = rand_unit_rat(rng);
  if (b < a) std::swap(a, b);
  return Interval(a, b, rng.flip(), rng.flip());
}

Figure2D rand_sigma_finite_figure(Rng& rng, int max_boxes) {
  std::vector<Box> boxes;
  int n = static_cast<int>(rng.range(1, max_boxes));
  for (int k = 0; k < n; ++k) {
    switch (rng.below(3)) {
      case 0:  // vertical segment
        boxes.push_back(Box{Interval::point(rand_unit_rat(rng)), rand_interval(rng)});
        break;
      case 1:  // horizontal segment
        boxes.push_back(Box{rand_interval(rng), Interval::point(rand_unit_rat(rng))});
        break;
      default:  // single point
        boxes.push_back(Box{Interval::point(rand_unit_rat(rng)),
                            Interval::point(rand_unit_rat(rng))});
        break;
    }
  }
  return Figure2D(std::move(boxes));
}

Figure2D rand_figure(Rng& rng, int max_boxes) {
  std::vector<Box> boxes;
  int n = static_cast<int>(rng.range(1, max_boxes));
  for (int k = 0; k < n; ++k) boxes.push_back(Box{rand_interval(rng), rand_interval(rng)});
  return Figure2D(std::move(boxes));
}

SimpleFunc rand_simple_func(Rng& rng, int max_terms) {
  std::vector<Term> terms;
  int n = static_cast<int>(rng.range(1, max_terms));
  for (int k = 0; k < n; ++k) {
    Rat c = rand_coeff(rng);
    if (c == 0) c = 1;
    terms.push_back(Term{c, rand_sigma_finite_figure(rng, 2)});
  }
  return SimpleFunc(std::move(terms));
}

namespace {

std::vector<Rat> rand_breaks(Rng& rng) {
  std::set<Rat> bs;
  int n = static_cast<int>(rng.range(0, 2));
  while (static_cast<int>(bs.size()) < n) {
    Rat b = rand_unit_rat(rng);
    if (b > 0 && b < 1) bs.insert(b);
  }
  return {bs.begin(), bs.end()};
}

}  // namespace

LineFunc rand_line_func(Rng& rng) {
  std::vector<Rat> breaks = rand_breaks(rng);
  std::vector<AffinePiece> pieces;
  for (size_t i = 0; i <= breaks.size(); ++i)
    pieces.push_back(AffinePiece{rand_coeff(rng), rand_coeff(rng)});
  return LineFunc(std::move(breaks), std::move(pieces));
}

LineRule rand_line_rule(Rng& rng) {
  std::vector<Rat> breaks = rand_breaks(rng);
  std::vector<RulePiece> pieces;
  for (size_t i = 0; i <= breaks.size(); ++i)
    pieces.push_back(
        RulePiece{rand_coeff(rng), rand_coeff(rng), rand_coeff(rng), rand_coeff(rng)});
  return LineRule(std::move(breaks), std::move(pieces));
}

Germ rand_germ(Rng& rng) {
  LineMap vexc, hexc;
  for (LineMap* m : {&vexc, &hexc}) {
    int n = static_cast<int>(rng.range(0, 2));
    for (int k = 0; k < n; ++k) m->emplace(rand_unit_rat(rng), rand_line_func(rng));
  }
  return Germ(rand_line_rule(rng), rand_line_rule(rng), std::move(vexc), std::move(hexc));
}

CandidateGlobal rand_candidate(Rng& rng, int max_overrides) {
  std::set<Rat> xcuts, ycuts;
  int nx = static_cast<int>(rng.range(0, 2));
  int ny = static_cast<int>(rng.range(0, 2));
  while (static_cast<int>(xcuts.size()) < nx) {
    Rat v = rand_unit_rat(rng);
    if (v > 0 && v < 1) xcuts.insert(v);
  }
  while (static_cast<int>(ycuts.size()) < ny) {
    Rat v = rand_unit_rat(rng);
    if (v > 0 && v < 1) ycuts.insert(v);
  }
  AxisAtoms xa = AxisAtoms::from_values({xcuts.begin(), xcuts.end()});
  AxisAtoms ya = AxisAtoms::from_values({ycuts.begin(), ycuts.end()});
  std::vector<std::vector<CellAffine>> cells;
  for (size_t j = 0; j < ya.count(); ++j) {
    std::vector<CellAffine> row;
    for (size_t i = 0; i < xa.count(); ++i)
      row.push_back(CellAffine{rand_coeff(rng), rand_coeff(rng), rand_coeff(rng)});
    cells.push_back(std::move(row));
  }
  LineMap vover, hover;
  int n = static_cast<int>(rng.range(0, max_overrides));
  for (int k = 0; k < n; ++k) {
    LineMap& m = rng.flip() ? vover : hover;
    m.emplace(rand_unit_rat(rng), rand_line_func(rng));
  }
  return CandidateGlobal(std::move(xa), std::move(ya), std::move(cells), std::move(vover),
                         std::move(hover));
}

}  // namespace linfinf
