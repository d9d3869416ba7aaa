#include "linfinf/measure.hpp"

#include <algorithm>

namespace linfinf {

CriticalLines critical_lines(const Figure2D& a) {
  std::vector<Interval> vint, hint;
  std::vector<Rat> vpts, hpts;
  for (const Box& b : a.boxes()) {
    bool wide = b.x.length() > 0;
    bool tall = b.y.length() > 0;
    if (wide && tall) {
      vint.push_back(b.x);
      hint.push_back(b.y);
    } else if (tall) {
      vpts.push_back(b.x.lo());  // {x} x J with positive height
    } else if (wide) {
      hpts.push_back(b.y.lo());  // I x {y} with positive width
    }
  }
  CriticalLines out;
  out.vertical_intervals = Set1D(std::move(vint));
  out.horizontal_intervals = Set1D(std::move(hint));
  auto finish = [](std::vector<Rat>& pts, const Set1D& covered) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::erase_if(pts, [&](const Rat& v) { return covered.contains(v); });
  };
  finish(vpts, out.vertical_intervals);
  finish(hpts, out.horizontal_intervals);
  out.vertical_points = std::move(vpts);
  out.horizontal_points = std::move(hpts);
  return out;
}

ExtRat mu_grid(const Figure2D& a) {
  CriticalLines cl = critical_lines(a);
  if (cl.has_area_box()) return ExtRat::inf();
  Rat total = 0;
  for (const Rat& x : cl.vertical_points) total += a.vertical_section(x).lebesgue();
  for (const Rat& y : cl.horizontal_points) total += a.horizontal_section(y).lebesgue();
  return ExtRat::of(total);
}

ExtRat mu_lines(const Figure2D& a) {
  CriticalLines cl = critical_lines(a);
  if (cl.has_area_box()) return ExtRat::inf();
  Rat total = 0;
  for (const Rat& y : cl.horizontal_points) total += a.horizontal_section(y).lebesgue();
  return ExtRat::of(total);
}

ExtRat measure_of(const Figure2D& a, MeasureKind kind) {
  return kind == MeasureKind::Grid ? mu_grid(a) : mu_lines(a);
}

bool sigma_finite(const Figure2D& a) { return !critical_lines(a).has_area_box(); }

}  // namespace linfinf
