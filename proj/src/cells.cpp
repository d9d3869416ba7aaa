#include "linfinf/cells.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace linfinf {

AxisAtoms AxisAtoms::from_values(std::vector<Rat> values) {
  values.push_back(0);
  values.push_back(1);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.front() < 0 || values.back() > 1)
    throw std::invalid_argument("cut value outside [0,1]");
  AxisAtoms a;
  a.values_ = std::move(values);
  return a;
}

Interval AxisAtoms::atom(size_t i) const {
  if (i % 2 == 0) return Interval::point(values_[i / 2]);
  return Interval::open(values_[(i - 1) / 2], values_[(i + 1) / 2]);
}

Rat AxisAtoms::representative(size_t i) const {
  if (i % 2 == 0) return values_[i / 2];
  return (values_[(i - 1) / 2] + values_[(i + 1) / 2]) / 2;
}

size_t AxisAtoms::locate(const Rat& v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  size_t k = static_cast<size_t>(it - values_.begin());
  if (it != values_.end() && *it == v) return 2 * k;
  if (k == 0 || k == values_.size())
    throw std::invalid_argument("value outside [0,1]");
  return 2 * k - 1;
}

CellDecomposition CellDecomposition::over(const std::vector<const Figure2D*>& figures) {
  std::vector<Rat> xs, ys;
  for (const Figure2D* f : figures) {
    for (const Box& b : f->boxes()) {
      xs.push_back(b.x.lo());
      xs.push_back(b.x.hi());
      ys.push_back(b.y.lo());
      ys.push_back(b.y.hi());
    }
  }
  CellDecomposition d;
  d.x_ = AxisAtoms::from_values(std::move(xs));
  d.y_ = AxisAtoms::from_values(std::move(ys));
  return d;
}

std::vector<std::pair<size_t, size_t>> refine_to_cells(const Figure2D& f,
                                                       const CellDecomposition& d) {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t j = 0; j < d.y().count(); ++j) {
    for (size_t i = 0; i < d.x().count(); ++i) {
      if (d.cell_in(f, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Figure2D cells_to_figure(const CellDecomposition& d,
                         const std::vector<std::pair<size_t, size_t>>& cells) {
  std::map<size_t, std::vector<size_t>> rows;
  for (auto [i, j] : cells) rows[j].push_back(i);
  std::vector<Box> boxes;
  for (auto& [j, is] : rows) {
    std::sort(is.begin(), is.end());
    size_t k = 0;
    while (k < is.size()) {
      size_t run_end = k;
      while (run_end + 1 < is.size() && is[run_end + 1] == is[run_end] + 1) ++run_end;
      // Adjacent atoms touch, so a run is one interval.
      Interval xi = *Interval::from_boundaries(d.x().atom(is[k]).start(),
                                               d.x().atom(is[run_end]).end());
      boxes.push_back(Box{xi, d.y().atom(j)});
      k = run_end + 1;
    }
  }
  return Figure2D(std::move(boxes));
}

Figure2D figure_complement(const Figure2D& a) {
  CellDecomposition d = CellDecomposition::over1(a);
  std::vector<std::pair<size_t, size_t>> keep;
  for (size_t j = 0; j < d.y().count(); ++j) {
    for (size_t i = 0; i < d.x().count(); ++i) {
      if (!d.cell_in(a, i, j)) keep.emplace_back(i, j);
    }
  }
  return cells_to_figure(d, keep);
}

Figure2D figure_diff(const Figure2D& a, const Figure2D& b) {
  CellDecomposition d = CellDecomposition::over2(a, b);
  std::vector<std::pair<size_t, size_t>> keep;
  for (size_t j = 0; j < d.y().count(); ++j) {
    for (size_t i = 0; i < d.x().count(); ++i) {
      if (d.cell_in(a, i, j) && !d.cell_in(b, i, j)) keep.emplace_back(i, j);
    }
  }
  return cells_to_figure(d, keep);
}

bool figure_same_set(const Figure2D& a, const Figure2D& b) {
  CellDecomposition d = CellDecomposition::over2(a, b);
  for (size_t j = 0; j < d.y().count(); ++j) {
    for (size_t i = 0; i < d.x().count(); ++i) {
      if (d.cell_in(a, i, j) != d.cell_in(b, i, j)) return false;
    }
  }
  return true;
}

bool figure_subset(const Figure2D& a, const Figure2D& b) {
  CellDecomposition d = CellDecomposition::over2(a, b);
  for (size_t j = 0; j < d.y().count(); ++j) {
    for (size_t i = 0; i < d.x().count(); ++i) {
      if (d.cell_in(a, i, j) && !d.cell_in(b, i, j)) return false;
    }
  }
  return true;
}

bool figure_is_empty_set(const Figure2D& a) { return !a.has_boxes(); }

}  // namespace linfinf
