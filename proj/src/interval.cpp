#include "linfinf/interval.hpp"

#include <stdexcept>

namespace linfinf {

Interval::Interval(Rat lo, Rat hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (lo_ < 0 || hi_ > 1) throw std::invalid_argument("interval outside [0,1]");
  if (lo_ > hi_) throw std::invalid_argument("interval endpoints out of order");
  if (lo_ == hi_ && !(lo_closed_ && hi_closed_))
    throw std::invalid_argument("degenerate interval must be a closed point");
}

bool Interval::contains(const Rat& x) const {
  if (x < lo_ || x > hi_) return false;
  if (x == lo_ && !lo_closed_) return false;
  if (x == hi_ && !hi_closed_) return false;
  return true;
}

std::optional<Interval> Interval::from_boundaries(const Boundary& s, const Boundary& e) {
  if (e < s) return std::nullopt;
  bool lo_closed = s.side == Boundary::kAt;
  bool hi_closed = e.side == Boundary::kAt;
  if (s.value == e.value && !(lo_closed && hi_closed)) return std::nullopt;
  return Interval(s.value, e.value, lo_closed, hi_closed);
}

std::string Interval::str() const {
  if (is_point()) return "{" + rat_str(lo_) + "}";
  std::string out;
  out += lo_closed_ ? '[' : '(';
  out += rat_str(lo_);
  out += ',';
  out += rat_str(hi_);
  out += hi_closed_ ? ']' : ')';
  return out;
}

}  // namespace linfinf
