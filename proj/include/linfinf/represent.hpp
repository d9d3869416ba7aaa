#pragma once

#include "linfinf/cells.hpp"
#include "linfinf/germ.hpp"

#include <optional>
#include <vector>

namespace linfinf {

/// (x,y) -> a + b*x + c*y on one cell.
struct CellAffine {
  Rat a, b, c;

  Rat at(const Rat& x, const Rat& y) const { return a + b * x + c * y; }

  friend bool operator==(const CellAffine& p, const CellAffine& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c;
  }
};

/// Symbolic global function: per-cell affine values on a coordinate cell
/// decomposition, plus finitely many whole-line overrides that replace the
/// cell values on their line (vertical overrides win at crossings).
class CandidateGlobal {
 public:
  CandidateGlobal(AxisAtoms x, AxisAtoms y, std::vector<std::vector<CellAffine>> cells,
                  LineMap vertical_overrides = {}, LineMap horizontal_overrides = {});

  /// Same value on every cell of the trivial decomposition.
  static CandidateGlobal uniform(CellAffine v, LineMap vertical_overrides = {},
                                 LineMap horizontal_overrides = {});

  const AxisAtoms& xatoms() const { return x_; }
  const AxisAtoms& yatoms() const { return y_; }
  /// cell value on x-atom i, y-atom j
  const CellAffine& cell(size_t i, size_t j) const { return cells_[j][i]; }
  const LineMap& overrides(Orientation o) const {
    return o == Orientation::Vertical ? vover_ : hover_;
  }

  Rat value_at(const Rat& x, const Rat& y) const;

  /// The candidate's restriction to one full line, as a function of the
  /// coordinate along the line. Values at the λ-null cell edges follow the
  /// piece convention of LineFunc.
  LineFunc trace(Orientation o, const Rat& s) const;

 private:
  AxisAtoms x_, y_;
  std::vector<std::vector<CellAffine>> cells_;  // [j][i]
  LineMap vover_, hover_;
};

struct ReprWitness {
  Figure2D set;  // a single segment: σ-finite, positive measure
  Orientation orientation;
  Rat line;
  Interval where;  // positive length, pointwise disagreement inside
  LineFunc lhs;    // candidate on the line
  LineFunc rhs;    // germ demand on the line
};

struct ReprVerdict {
  std::optional<ReprWitness> witness;

  bool represents() const { return !witness.has_value(); }
};

/// Decides whether the candidate equals the germ member g_A λ-a.e. on every
/// σ-finite A. Positive-area cells are checked by polynomial identity in the
/// line index; individual lines (cell edges, overrides, germ exceptions) by
/// a.e. line comparison. Witness lines are chosen smallest-denominator-first.
ReprVerdict represents(const CandidateGlobal& g, const Germ& germ);

/// Independent re-check of a witness: σ-finiteness, positive length, and
/// pointwise disagreement of restrict_germ vs candidate values on a rational
/// sample of the interval.
bool verify_witness(const CandidateGlobal& g, const Germ& germ, const ReprWitness& w);

struct NonReprEntry {
  size_t index;
  ReprVerdict verdict;
  bool verified;  // witness passed verify_witness
};

struct NonReprReport {
  std::vector<NonReprEntry> entries;
  bool all_witnessed;  // every candidate got a verified witness
};

NonReprReport exhaustive_nonrepresentability(const Germ& germ,
                                             const std::vector<CandidateGlobal>& battery);

/// All per-cell (a,b,c) with coefficients in {-1, -1/2, 0, 1/2, 1} on the
/// trivial decomposition: 125 candidates in lexicographic coefficient order.
std::vector<CandidateGlobal> standard_battery();

}  // namespace linfinf
