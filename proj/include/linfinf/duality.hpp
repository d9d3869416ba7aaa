#pragma once

#include "linfinf/germ.hpp"
#include "linfinf/simple_fn.hpp"

namespace linfinf {

/// A germ reinterpreted as integration weights for the line-sum functional,
/// together with the measure the functional is paired against.
struct LineFormFunctional {
  Germ weights;
  MeasureKind measure;
};

/// Tf = Σ over critical vertical lines x of ∫ f(x,·)·g(x,·) + mirrored
/// horizontal sum, with the germ restricted to the support of f first. Under
/// the lines measure only the horizontal sum is present (vertical lines are
/// null). Throws NotIntegrable when l1_norm(f) = ∞.
Rat pairing(const Germ& g, const SimpleFunc& f, MeasureKind kind);

/// The sup the pairing can reach over unit-norm f: the full germ norm under
/// the grid measure; only the horizontal content under the lines measure.
Rat attainable_norm(const Germ& g, MeasureKind kind);

/// Unit-l1-norm f with |pairing(g,f)| >= attainable_norm - eps, built by
/// exact affine threshold solving at the norm-attaining corner. Deterministic.
/// Throws ZeroGerm when the attainable norm is 0.
SimpleFunc norm_witness(const Germ& g, const Rat& eps, MeasureKind kind);

LineFormFunctional functional_from_germ(const Germ& g, MeasureKind kind);
Germ germ_from_line_form(const LineFormFunctional& t);
Rat apply_functional(const LineFormFunctional& t, const SimpleFunc& f);

}  // namespace linfinf
