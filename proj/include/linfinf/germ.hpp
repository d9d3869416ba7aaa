#pragma once

#include "linfinf/errors.hpp"
#include "linfinf/line_fn.hpp"
#include "linfinf/measure.hpp"

#include <map>
#include <optional>
#include <vector>

namespace linfinf {

/// One t-piece of a line-indexed family: value(s,t) = (a0 + a1·s) + (b0 + b1·s)·t
/// where s is the line index (x for vertical lines, y for horizontal) and t
/// the coordinate along the line. Affine s-dependence keeps sups and witness
/// inequalities exactly solvable.
struct RulePiece {
  Rat a0, a1, b0, b1;

  AffinePiece at_line(const Rat& s) const { return AffinePiece{a0 + a1 * s, b0 + b1 * s}; }
  Rat value(const Rat& s, const Rat& t) const { return at_line(s).at(t); }

  friend bool operator==(const RulePiece& p, const RulePiece& q) {
    return p.a0 == q.a0 && p.a1 == q.a1 && p.b0 == q.b0 && p.b1 == q.b1;
  }
};

/// Piecewise (in t) bilinear description of a function on every line of one
/// orientation at once. Same break conventions as LineFunc.
class LineRule {
 public:
  LineRule(std::vector<Rat> breaks, std::vector<RulePiece> pieces);

  static LineRule constant(Rat c) {
    return LineRule({}, {RulePiece{std::move(c), 0, 0, 0}});
  }
  static LineRule zero() { return constant(0); }
  /// value(s,t) = t
  static LineRule coordinate() { return LineRule({}, {RulePiece{0, 0, 1, 0}}); }
  /// value(s,t) = s
  static LineRule line_index() { return LineRule({}, {RulePiece{0, 1, 0, 0}}); }

  const std::vector<Rat>& breaks() const { return breaks_; }
  const std::vector<RulePiece>& pieces() const { return pieces_; }
  Rat edge(size_t i) const;

  LineFunc at_line(const Rat& s) const;
  /// sup over (s,t) in [0,1] x [0,1] of |value|; bilinear pieces attain it at
  /// rectangle corners.
  Rat sup_abs() const;

 private:
  std::vector<Rat> breaks_;
  std::vector<RulePiece> pieces_;
};

LineRule add_rule(const LineRule& f, const LineRule& g);
LineRule scale_rule(const Rat& c, const LineRule& f);

using LineMap = std::map<Rat, LineFunc>;

/// Intensional description of a germ: one rule per orientation plus finitely
/// many per-line exceptions that replace the rule on their line.
class Germ {
 public:
  Germ(LineRule vertical, LineRule horizontal, LineMap vertical_exceptions = {},
       LineMap horizontal_exceptions = {});

  static Germ zero() { return Germ(LineRule::zero(), LineRule::zero()); }

  const LineRule& rule(Orientation o) const {
    return o == Orientation::Vertical ? vertical_ : horizontal_;
  }
  const LineMap& exceptions(Orientation o) const {
    return o == Orientation::Vertical ? vexc_ : hexc_;
  }

  /// The germ's function on one specific line.
  LineFunc line_function(Orientation o, const Rat& s) const;

 private:
  LineRule vertical_, horizontal_;
  LineMap vexc_, hexc_;
};

/// The running example germ: value = coordinate along the line on every
/// vertical and every horizontal line (norm 1).
Germ coordinate_germ();

/// Materialization of the germ member g_A for one σ-finite A: line functions
/// on A's critical lines, 0 off-line and at line crossings.
struct RestrictedGerm {
  LineMap vertical;
  LineMap horizontal;

  Rat value_at(const Rat& x, const Rat& y) const;
};

/// Instantiates the germ on the critical lines of A.
/// Throws NotSigmaFinite when A contains a positive-area box.
RestrictedGerm restrict_germ(const Germ& g, const Figure2D& a);

/// sup over σ-finite A of the per-line λ-essential sup of g_A: corner
/// evaluation of both rules maximized with every exception's linf.
Rat germ_norm(const Germ& g);

Germ add_germ(const Germ& g, const Germ& h);
Germ scale_germ(const Rat& c, const Germ& g);

/// Equality in the quotient space: rules agree coefficient-wise on the common
/// piece refinement and every exception line agrees λ-a.e.
bool eq_ae_germ(const Germ& g, const Germ& h);

struct GermTableEntry {
  Figure2D set;
  RestrictedGerm fn;
};

/// A raw family {(A, g_A)} whose mutual consistency is not yet known.
struct RawGermTable {
  std::vector<GermTableEntry> entries;
};

struct ConsistencyWitness {
  size_t i, j;              // entry indices, i < j
  Orientation orientation;
  Rat line;
  Interval where;           // positive length, pointwise disagreement
};

/// Checks g_A = g_B λ-a.e. on every line critical in both sets, for every
/// entry pair; nullopt means consistent. Throws NotSigmaFinite on entries
/// with positive-area sets.
std::optional<ConsistencyWitness> consistency_check(const RawGermTable& table);

}  // namespace linfinf
