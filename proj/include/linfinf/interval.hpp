#pragma once

#include "linfinf/rational.hpp"

#include <compare>
#include <optional>
#include <string>

namespace linfinf {

/// Position on the line refined by a side marker: (v, kBelow) sits just below
/// v, (v, kAt) is v itself, (v, kAbove) just above. Lexicographic order makes
/// open/closed endpoint bookkeeping exact.
struct Boundary {
  static constexpr int kBelow = -1;
  static constexpr int kAt = 0;
  static constexpr int kAbove = 1;

  Rat value;
  int side = kAt;

  friend bool operator==(const Boundary& a, const Boundary& b) {
    return a.value == b.value && a.side == b.side;
  }
  friend bool operator<(const Boundary& a, const Boundary& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.side < b.side;
  }
  friend bool operator<=(const Boundary& a, const Boundary& b) {
    return a == b || a < b;
  }
  friend bool operator>(const Boundary& a, const Boundary& b) { return b < a; }
  friend bool operator>=(const Boundary& a, const Boundary& b) { return b <= a; }
};

/// One nonempty interval inside [0,1] with exact endpoint flags.
/// Invariants: 0 <= lo <= hi <= 1, and a point (lo == hi) is doubly closed.
class Interval {
 public:
  Interval(Rat lo, Rat hi, bool lo_closed, bool hi_closed);

  static Interval point(Rat v) { return Interval(v, v, true, true); }
  static Interval closed(Rat lo, Rat hi) { return Interval(lo, hi, true, true); }
  static Interval open(Rat lo, Rat hi) { return Interval(lo, hi, false, false); }
  static Interval full() { return Interval(0, 1, true, true); }

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool is_point() const { return lo_ == hi_; }
  Rat length() const { return hi_ - lo_; }
  bool contains(const Rat& x) const;

  /// An interior point: the midpoint for proper intervals, the value itself
  /// for points.
  Rat representative() const { return is_point() ? lo_ : Rat((lo_ + hi_) / 2); }

  Boundary start() const { return {lo_, lo_closed_ ? Boundary::kAt : Boundary::kAbove}; }
  Boundary end() const { return {hi_, hi_closed_ ? Boundary::kAt : Boundary::kBelow}; }

  /// Rebuilds an interval from boundary positions; nullopt when the range is
  /// empty. `s.side` must be kAt/kAbove and `e.side` kBelow/kAt.
  static std::optional<Interval> from_boundaries(const Boundary& s, const Boundary& e);

  std::string str() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_closed_ == b.lo_closed_ &&
           a.hi_closed_ == b.hi_closed_;
  }

 private:
  Rat lo_, hi_;
  bool lo_closed_, hi_closed_;
};

/// Successor position: the start that touches an interval ending at `e`.
inline Boundary touch_successor(const Boundary& e) {
  return {e.value, e.side + 1};
}

}  // namespace linfinf
