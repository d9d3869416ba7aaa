#pragma once

#include "linfinf/cells.hpp"
#include "linfinf/line_fn.hpp"
#include "linfinf/measure.hpp"

#include <vector>

namespace linfinf {

/// One weighted indicator: coeff * 1_figure.
struct Term {
  Rat coeff;
  Figure2D figure;
};

/// Finite linear combination of box-figure indicators; the pointwise value is
/// the coefficient sum over covering terms.
class SimpleFunc {
 public:
  SimpleFunc() = default;
  explicit SimpleFunc(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static SimpleFunc zero() { return SimpleFunc(); }
  static SimpleFunc indicator(Rat coeff, Figure2D figure) {
    return SimpleFunc({Term{std::move(coeff), std::move(figure)}});
  }

  const std::vector<Term>& terms() const { return terms_; }
  Rat value_at(const Rat& x, const Rat& y) const;

 private:
  std::vector<Term> terms_;
};

SimpleFunc add_func(const SimpleFunc& f, const SimpleFunc& g);
SimpleFunc scale_func(const Rat& c, const SimpleFunc& f);

/// Exact set where the coefficient sum is nonzero, assembled from the common
/// cell refinement of all term figures.
Figure2D support(const SimpleFunc& f);

/// ∫ |f| dμ. Infinite exactly when the support contains a positive-area box;
/// otherwise the finite sum of per-critical-line absolute integrals (only
/// horizontal lines under the lines measure).
ExtRat l1_norm(const SimpleFunc& f, MeasureKind kind);

/// Exact 1-D restriction f(at, ·) (vertical) or f(·, at) (horizontal).
LineStep restrict_line(const SimpleFunc& f, Orientation o, const Rat& at);

}  // namespace linfinf
