#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <set>
#include <string>

namespace linfinf {

/// Exact rational scalar. Stored reduced, denominator always positive.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }
inline int rat_sign(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }
inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

BigInt rat_floor(const Rat& r);

/// Renders as "p/q" with q > 0 and gcd(|p|, q) = 1 (integers as "p/1").
std::string rat_str(const Rat& r);

/// Strict parse of "p/q" (or a bare integer "p"). Rejects non-reduced input
/// such as "2/4", zero or negative denominators, and anything non-numeric.
std::optional<Rat> parse_rat(const std::string& text);

/// The rational with the smallest denominator strictly inside (lo, hi) that is
/// not in `excluded`; ties broken by the smallest numerator. Deterministic.
Rat smallest_denominator_in(const Rat& lo, const Rat& hi,
                            const std::set<Rat>& excluded = {});

}  // namespace linfinf
