#pragma once

#include "linfinf/germ.hpp"
#include "linfinf/represent.hpp"

#include <optional>
#include <vector>

namespace linfinf {

/// The two modeled σ-fields: every figure, or the restricted field where a
/// set or its complement lies within finitely many horizontal lines.
enum class SigmaFieldKind { AllFigures, CountableHorizontalLines };

struct SigmaFieldModel {
  SigmaFieldKind kind;
};

bool member(const SigmaFieldModel& m, const Figure2D& a);

/// The symbolic decomposition of the square into the horizontal lines
/// Ω_y = [0,1] x {y}; parts are instantiated on demand.
struct Decomposition {
  static Figure2D part(const Rat& y) { return Figure2D::hseg(Interval::full(), y); }
};

/// Null-lifting condition: if every part-slice of A is null then A is null.
struct StarItem {
  size_t index;
  bool premise;  // all slices μ(A ∩ Ω_y) are zero
  ExtRat mu;     // μ(A)
  bool pass;     // premise implies μ(A) = 0
};

struct StarReport {
  std::vector<StarItem> items;
  bool all_pass = true;
};

StarReport check_star(const Decomposition& d, MeasureKind kind,
                      const std::vector<Figure2D>& battery);

/// Slicewise-measurability condition: if every slice A ∩ Ω_y is in the field
/// then A is. Every slice lies within one line, so the premise holds for all
/// figures; the first battery element outside the field is the witness.
std::optional<size_t> check_double_star(const Decomposition& d, const SigmaFieldModel& m,
                                        const std::vector<Figure2D>& battery);

using PatchedFunction = CandidateGlobal;

/// Glues the germ's horizontal-line functions into one global function
/// g(x,y) = rule value at (s=y, t=x); exceptions become line overrides.
/// Throws Unsupported when a rule piece carries an s·t cross term (the value
/// would not be affine per cell).
PatchedFunction patch_global(const Germ& g, const Decomposition& d);

struct MeasurabilityWitness {
  Figure2D set;  // a super-level set outside the field
  Rat threshold;
};

/// Searches the super-level sets {g > q} over thresholds derived from cell
/// coefficient values (range midpoints first, then the values themselves) for
/// one outside the field; nullopt means every tested level set is a member.
/// Throws Unsupported if some cell value depends on both coordinates.
std::optional<MeasurabilityWitness> measurable_witness(const PatchedFunction& g,
                                                       const SigmaFieldModel& m);

/// The finite-measure countability hypothesis: members of the field with
/// finite measure must touch only finitely many horizontal lines.
struct CountabilityItem {
  size_t index;
  bool in_field;
  bool finite_measure;
  bool finitely_many_lines;
  bool pass;
};

struct CountabilityReport {
  std::vector<CountabilityItem> items;
  bool all_pass = true;
};

CountabilityReport countability_check(const SigmaFieldModel& m, MeasureKind kind,
                                      const std::vector<Figure2D>& battery);

}  // namespace linfinf
