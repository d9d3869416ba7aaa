#include "linfinf/figure.hpp"

namespace linfinf {

bool Figure2D::contains(const Rat& px, const Rat& py) const {
  for (const Box& b : boxes_) {
    if (b.contains(px, py)) return true;
  }
  return false;
}

Set1D Figure2D::vertical_section(const Rat& x0) const {
  std::vector<Interval> parts;
  for (const Box& b : boxes_) {
    if (b.x.contains(x0)) parts.push_back(b.y);
  }
  return Set1D(std::move(parts));
}

Set1D Figure2D::horizontal_section(const Rat& y0) const {
  std::vector<Interval> parts;
  for (const Box& b : boxes_) {
    if (b.y.contains(y0)) parts.push_back(b.x);
  }
  return Set1D(std::move(parts));
}

std::string Figure2D::str() const {
  if (boxes_.empty()) return "{}";
  std::string out;
  for (size_t i = 0; i < boxes_.size(); ++i) {
    if (i) out += " u ";
    out += boxes_[i].str();
  }
  return out;
}

Figure2D figure_union(const Figure2D& a, const Figure2D& b) {
  std::vector<Box> boxes = a.boxes();
  boxes.insert(boxes.end(), b.boxes().begin(), b.boxes().end());
  return Figure2D(std::move(boxes));
}

Figure2D figure_intersect(const Figure2D& a, const Figure2D& b) {
  std::vector<Box> boxes;
  for (const Box& p : a.boxes()) {
    for (const Box& q : b.boxes()) {
      Boundary xs = std::max(p.x.start(), q.x.start(),
                             [](const Boundary& u, const Boundary& v) { return u < v; });
      Boundary xe = std::min(p.x.end(), q.x.end(),
                             [](const Boundary& u, const Boundary& v) { return u < v; });
      auto xi = Interval::from_boundaries(xs, xe);
      if (!xi) continue;
      Boundary ys = std::max(p.y.start(), q.y.start(),
                             [](const Boundary& u, const Boundary& v) { return u < v; });
      Boundary ye = std::min(p.y.end(), q.y.end(),
                             [](const Boundary& u, const Boundary& v) { return u < v; });
      auto yi = Interval::from_boundaries(ys, ye);
      if (!yi) continue;
      boxes.push_back(Box{*xi, *yi});
    }
  }
  return Figure2D(std::move(boxes));
}

}  // namespace linfinf
