#pragma once

#include "linfinf/interval.hpp"

#include <string>
#include <vector>

namespace linfinf {

/// Finite union of intervals in [0,1], kept canonical: components sorted,
/// pairwise disjoint, and non-adjacent (no two can merge into one interval).
/// Equality of canonical forms is set equality.
class Set1D {
 public:
  Set1D() = default;
  explicit Set1D(std::vector<Interval> components);

  static Set1D empty() { return Set1D(); }
  static Set1D full() { return Set1D({Interval::full()}); }
  static Set1D point(const Rat& v) { return Set1D({Interval::point(v)}); }

  const std::vector<Interval>& components() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool contains(const Rat& x) const;
  Rat lebesgue() const;

  std::string str() const;

  friend bool operator==(const Set1D& a, const Set1D& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<Interval> parts_;  // canonical
};

Set1D set_union(const Set1D& a, const Set1D& b);
Set1D set_intersect(const Set1D& a, const Set1D& b);
Set1D set_complement(const Set1D& a);
Set1D set_diff(const Set1D& a, const Set1D& b);

}  // namespace linfinf
