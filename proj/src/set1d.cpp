#include "linfinf/set1d.hpp"

#include <algorithm>

namespace linfinf {

namespace {

// Sorts by start boundary and merges overlapping or touching components.
std::vector<Interval> canonicalize(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    Boundary sa = a.start(), sb = b.start();
    if (!(sa == sb)) return sa < sb;
    return a.end() < b.end();
  });
  std::vector<Interval> out;
  for (const Interval& iv : parts) {
    if (!out.empty()) {
      Interval& cur = out.back();
      // Touching means the next start is at or before the position just past
      // the current end.
      if (iv.start() <= touch_successor(cur.end())) {
        Boundary e = std::max(cur.end(), iv.end(),
                              [](const Boundary& x, const Boundary& y) { return x < y; });
        cur = *Interval::from_boundaries(cur.start(), e);
        continue;
      }
    }
    out.push_back(iv);
  }
  return out;
}

}  // namespace

Set1D::Set1D(std::vector<Interval> components) : parts_(canonicalize(std::move(components))) {}

bool Set1D::contains(const Rat& x) const {
  for (const Interval& iv : parts_) {
    if (x < iv.lo()) break;
    if (iv.contains(x)) return true;
  }
  return false;
}

Rat Set1D::lebesgue() const {
  Rat total = 0;
  for (const Interval& iv : parts_) total += iv.length();
  return total;
}

std::string Set1D::str() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " u ";
    out += parts_[i].str();
  }
  return out;
}

Set1D set_union(const Set1D& a, const Set1D& b) {
  std::vector<Interval> parts = a.components();
  parts.insert(parts.end(), b.components().begin(), b.components().end());
  return Set1D(std::move(parts));
}

Set1D set_intersect(const Set1D& a, const Set1D& b) {
  std::vector<Interval> parts;
  for (const Interval& x : a.components()) {
    for (const Interval& y : b.components()) {
      if (y.start() > x.end() || x.start() > y.end()) continue;
      Boundary s = std::max(x.start(), y.start(),
                            [](const Boundary& p, const Boundary& q) { return p < q; });
      Boundary e = std::min(x.end(), y.end(),
                            [](const Boundary& p, const Boundary& q) { return p < q; });
      if (auto iv = Interval::from_boundaries(s, e)) parts.push_back(*iv);
    }
  }
  return Set1D(std::move(parts));
}

Set1D set_complement(const Set1D& a) {
  std::vector<Interval> parts;
  Boundary cursor{Rat(0), Boundary::kAt};  // first uncovered position
  for (const Interval& iv : a.components()) {
    Boundary s = iv.start();
    // Gap [cursor, just-before-s] if nonempty.
    Boundary gap_end{s.value, s.side - 1};
    if (auto g = Interval::from_boundaries(cursor, gap_end)) parts.push_back(*g);
    cursor = touch_successor(iv.end());
  }
  Boundary one{Rat(1), Boundary::kAt};
  if (cursor <= one) {
    if (auto g = Interval::from_boundaries(cursor, one)) parts.push_back(*g);
  }
  return Set1D(std::move(parts));
}

Set1D set_diff(const Set1D& a, const Set1D& b) {
  return set_intersect(a, set_complement(b));
}

}  // namespace linfinf
