#include "linfinf/duality.hpp"

#include "linfinf/errors.hpp"

#include <set>

namespace linfinf {

Rat pairing(const Germ& g, const SimpleFunc& f, MeasureKind kind) {
  if (!l1_norm(f, kind).is_finite) throw NotIntegrable("l1 norm is infinite");
  RestrictedGerm r = restrict_germ(g, support(f));
  Rat total = 0;
  if (kind == MeasureKind::Grid) {
    for (const auto& [x, w] : r.vertical)
      total += integrate_line(restrict_line(f, Orientation::Vertical, x), w, Set1D::full());
  }
  for (const auto& [y, w] : r.horizontal)
    total += integrate_line(restrict_line(f, Orientation::Horizontal, y), w, Set1D::full());
  return total;
}

Rat attainable_norm(const Germ& g, MeasureKind kind) {
  if (kind == MeasureKind::Grid) return germ_norm(g);
  Rat best = g.rule(Orientation::Horizontal).sup_abs();
  for (const auto& [key, fn] : g.exceptions(Orientation::Horizontal))
    best = rat_max(best, linf_line(fn, Set1D::full()));
  return best;
}

namespace {

struct AttainingLine {
  Orientation orientation;
  Rat line;       // concrete line index carrying the near-sup value
  LineFunc fn;    // the germ's function on that line
  size_t piece;   // piece of fn whose closure contains the attaining t
  Rat t_star;
  int sign;       // sign of fn(t_star)
};

// Finds where the sup M is attained, then fixes a concrete line. On a rule
// whose corner value varies with s, the line is chosen by solving
// sign*value >= (M+tau)/2 exactly in s, smallest-denominator rational,
// skipping exception keys (the rule does not hold there).
AttainingLine locate_attainment(const Germ& g, const Rat& m, const Rat& tau,
                                MeasureKind kind) {
  std::vector<Orientation> orients;
  if (kind == MeasureKind::Grid)
    orients = {Orientation::Vertical, Orientation::Horizontal};
  else
    orients = {Orientation::Horizontal};

  Rat tau_s = (m + tau) / 2;
  for (Orientation o : orients) {
    const LineRule& rule = g.rule(o);
    for (size_t i = 0; i < rule.pieces().size(); ++i) {
      const RulePiece& p = rule.pieces()[i];
      for (int s = 0; s <= 1; ++s) {
        for (const Rat& t : {rule.edge(i), rule.edge(i + 1)}) {
          Rat v = p.value(s, t);
          if (rat_abs(v) != m) continue;
          int sign = rat_sign(v);
          // corner value as a function of the line index:
          // v(s) = (a0 + b0 t) + (a1 + b1 t) s
          Rat alpha = sign * (p.a0 + p.b0 * t);
          Rat beta = sign * (p.a1 + p.b1 * t);
          Rat slo = 0, shi = 1;
          if (beta > 0) {
            slo = rat_max(slo, (tau_s - alpha) / beta);
          } else if (beta < 0) {
            shi = rat_min(shi, (tau_s - alpha) / beta);
          }
          std::set<Rat> skip;
          for (const auto& [key, fn] : g.exceptions(o)) skip.insert(key);
          Rat line = smallest_denominator_in(slo, shi, skip);
          return AttainingLine{o, line, rule.at_line(line), i, t, sign};
        }
      }
    }
    for (const auto& [key, fn] : g.exceptions(o)) {
      for (size_t i = 0; i < fn.pieces().size(); ++i) {
        const AffinePiece& p = fn.pieces()[i];
        for (const Rat& t : {fn.edge(i), fn.edge(i + 1)}) {
          Rat v = p.at(t);
          if (rat_abs(v) != m) continue;
          return AttainingLine{o, key, fn, i, t, rat_sign(v)};
        }
      }
    }
  }
  throw std::logic_error("sup not attained at any corner");
}

}  // namespace

SimpleFunc norm_witness(const Germ& g, const Rat& eps, MeasureKind kind) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  Rat m = attainable_norm(g, kind);
  if (m == 0) throw ZeroGerm("germ has no nonzero content the measure can see");
  Rat tau = rat_max(m - eps, Rat(m / 2));

  AttainingLine at = locate_attainment(g, m, tau, kind);
  // {t in piece closure : sign*fn >= tau} is a closed interval of positive
  // length around t_star since sign*fn(t_star) > tau.
  const AffinePiece& p = at.fn.pieces()[at.piece];
  Rat lo = at.fn.edge(at.piece), hi = at.fn.edge(at.piece + 1);
  Rat a = at.sign * p.a, b = at.sign * p.b;
  if (b > 0) {
    lo = rat_max(lo, (tau - a) / b);
  } else if (b < 0) {
    hi = rat_min(hi, (tau - a) / b);
  }

  Rat coeff = Rat(at.sign) / (hi - lo);
  Interval seg = Interval::closed(lo, hi);
  Figure2D box = at.orientation == Orientation::Vertical ? Figure2D::vseg(at.line, seg)
                                                         : Figure2D::hseg(seg, at.line);
  return SimpleFunc::indicator(coeff, box);
}

LineFormFunctional functional_from_germ(const Germ& g, MeasureKind kind) {
  germ_norm(g);  // finite by construction; the class admits no unbounded weights
  return LineFormFunctional{g, kind};
}

Germ germ_from_line_form(const LineFormFunctional& t) { return t.weights; }

Rat apply_functional(const LineFormFunctional& t, const SimpleFunc& f) {
  return pairing(t.weights, f, t.measure);
}

}  // namespace linfinf
