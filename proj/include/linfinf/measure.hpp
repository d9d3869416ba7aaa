#pragma once

#include "linfinf/figure.hpp"

#include <string>
#include <vector>

namespace linfinf {

/// Nonnegative rational extended with a single infinity.
struct ExtRat {
  bool is_finite = true;
  Rat value = 0;  // meaningful only when finite

  static ExtRat inf() { return ExtRat{false, Rat(0)}; }
  static ExtRat of(Rat v) { return ExtRat{true, std::move(v)}; }

  std::string str() const { return is_finite ? rat_str(value) : "inf"; }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.is_finite != b.is_finite) return false;
    return !a.is_finite || a.value == b.value;
  }
  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (!a.is_finite || !b.is_finite) return inf();
    return of(a.value + b.value);
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) {
    if (!b.is_finite) return true;
    if (!a.is_finite) return false;
    return a.value <= b.value;
  }
};

/// Which of the two section-sum measures on the square is in force: the grid
/// measure sums both section families, the lines measure only horizontal ones.
enum class MeasureKind { Grid, Lines };

/// Exact classification of where a figure carries positive-length sections.
/// Points list lines with isolated positive sections; interval lists are
/// nonempty exactly when the figure contains a positive-area box.
struct CriticalLines {
  std::vector<Rat> vertical_points;    // x with λ(A_x^v) > 0, isolated
  Set1D vertical_intervals;            // x ranges where λ(A_x^v) > 0 throughout
  std::vector<Rat> horizontal_points;  // y with λ(A_y^h) > 0, isolated
  Set1D horizontal_intervals;

  bool has_area_box() const {
    return !vertical_intervals.is_empty() || !horizontal_intervals.is_empty();
  }
};

CriticalLines critical_lines(const Figure2D& a);

/// Section-sum measure over both axes; infinite exactly on figures containing
/// a positive-area box.
ExtRat mu_grid(const Figure2D& a);

/// Horizontal-section sum only; vertical segments are null.
ExtRat mu_lines(const Figure2D& a);

ExtRat measure_of(const Figure2D& a, MeasureKind kind);

/// A figure is a countable union of finite-measure pieces iff it contains no
/// positive-area box; the classifier is the same for both measures.
bool sigma_finite(const Figure2D& a);

}  // namespace linfinf
