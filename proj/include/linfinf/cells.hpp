#pragma once

#include "linfinf/figure.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace linfinf {

/// Partition of [0,1] induced by a finite set of cut values (always including
/// 0 and 1): alternating point atoms {v_k} and open atoms (v_k, v_{k+1}).
/// Atom index 2k is the point v_k; index 2k+1 is the open gap after it.
class AxisAtoms {
 public:
  static AxisAtoms from_values(std::vector<Rat> values);

  size_t count() const { return 2 * values_.size() - 1; }
  const std::vector<Rat>& values() const { return values_; }

  Interval atom(size_t i) const;
  bool atom_is_point(size_t i) const { return i % 2 == 0; }
  /// Midpoint of open atoms, the value itself for point atoms. Membership of
  /// any refined figure is constant on an atom, so one probe decides it.
  Rat representative(size_t i) const;
  size_t locate(const Rat& v) const;

 private:
  std::vector<Rat> values_;  // sorted, distinct, values_.front()=0, back()=1
};

/// Common refinement of a family of figures: the grid of atom products. Every
/// input figure is an exact union of cells, so per-cell representative probes
/// decide all set predicates.
class CellDecomposition {
 public:
  static CellDecomposition over(const std::vector<const Figure2D*>& figures);
  static CellDecomposition over2(const Figure2D& a, const Figure2D& b) {
    return over({&a, &b});
  }
  static CellDecomposition over1(const Figure2D& a) { return over({&a}); }

  const AxisAtoms& x() const { return x_; }
  const AxisAtoms& y() const { return y_; }

  Box cell_box(size_t i, size_t j) const { return Box{x_.atom(i), y_.atom(j)}; }
  std::pair<Rat, Rat> rep(size_t i, size_t j) const {
    return {x_.representative(i), y_.representative(j)};
  }
  bool cell_in(const Figure2D& f, size_t i, size_t j) const {
    auto [px, py] = rep(i, j);
    return f.contains(px, py);
  }

 private:
  AxisAtoms x_, y_;
};

/// Cells of `d` contained in `f`, as (x atom, y atom) index pairs in row-major
/// (y outer) order.
std::vector<std::pair<size_t, size_t>> refine_to_cells(const Figure2D& f,
                                                       const CellDecomposition& d);

/// Union of the selected cells of `d` as a figure, with runs of adjacent
/// x-atoms merged per y-atom row.
Figure2D cells_to_figure(const CellDecomposition& d,
                         const std::vector<std::pair<size_t, size_t>>& cells);

}  // namespace linfinf
