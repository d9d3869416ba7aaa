#pragma once

#include "linfinf/set1d.hpp"

#include <string>
#include <vector>

namespace linfinf {

/// Axis-aligned product of two intervals in [0,1]^2. Either factor may be a
/// point, giving segments and single points as degenerate boxes.
struct Box {
  Interval x;
  Interval y;

  bool contains(const Rat& px, const Rat& py) const {
    return x.contains(px) && y.contains(py);
  }
  Rat area() const { return x.length() * y.length(); }
  std::string str() const { return x.str() + " x " + y.str(); }

  friend bool operator==(const Box& a, const Box& b) { return a.x == b.x && a.y == b.y; }
};

/// Finite union of boxes. Boxes may overlap; set-level comparisons go through
/// the common cell refinement, not the box list.
class Figure2D {
 public:
  Figure2D() = default;
  explicit Figure2D(std::vector<Box> boxes) : boxes_(std::move(boxes)) {}

  static Figure2D empty() { return Figure2D(); }
  static Figure2D unit_square() {
    return Figure2D({Box{Interval::full(), Interval::full()}});
  }
  /// Vertical segment {x} x J.
  static Figure2D vseg(const Rat& x, const Interval& j) {
    return Figure2D({Box{Interval::point(x), j}});
  }
  /// Horizontal segment I x {y}.
  static Figure2D hseg(const Interval& i, const Rat& y) {
    return Figure2D({Box{i, Interval::point(y)}});
  }

  const std::vector<Box>& boxes() const { return boxes_; }
  bool has_boxes() const { return !boxes_.empty(); }

  bool contains(const Rat& px, const Rat& py) const;

  /// {y : (x0, y) in F}
  Set1D vertical_section(const Rat& x0) const;
  /// {x : (x, y0) in F}
  Set1D horizontal_section(const Rat& y0) const;

  std::string str() const;

 private:
  std::vector<Box> boxes_;
};

Figure2D figure_union(const Figure2D& a, const Figure2D& b);
Figure2D figure_intersect(const Figure2D& a, const Figure2D& b);

// Cell-refinement based: see cells.hpp for the underlying decomposition.
Figure2D figure_complement(const Figure2D& a);
Figure2D figure_diff(const Figure2D& a, const Figure2D& b);
bool figure_same_set(const Figure2D& a, const Figure2D& b);
bool figure_subset(const Figure2D& a, const Figure2D& b);
bool figure_is_empty_set(const Figure2D& a);

}  // namespace linfinf
