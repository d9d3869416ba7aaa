#include "linfinf/rational.hpp"

#include <cctype>

namespace linfinf {

BigInt rat_floor(const Rat& r) {
  BigInt n = numerator(r);
  BigInt d = denominator(r);
  BigInt q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

std::string rat_str(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool parse_integer(const std::string& s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  if (s.size() - i > 1 && s[i] == '0') return false;  // no leading zeros
  out = BigInt(s);
  return true;
}

}  // namespace

std::optional<Rat> parse_rat(const std::string& text) {
  auto slash = text.find('/');
  BigInt num, den;
  if (slash == std::string::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
    return Rat(num);
  }
  if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
  if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
  if (den <= 0) return std::nullopt;
  if (gcd(abs(num), den) != 1) return std::nullopt;  // "2/4" is rejected
  return Rat(num, den);
}

Rat smallest_denominator_in(const Rat& lo, const Rat& hi,
                            const std::set<Rat>& excluded) {
  if (!(lo < hi)) throw std::invalid_argument("empty interval");
  for (BigInt q = 1;; ++q) {
    // p/q in (lo, hi) strictly, ascending p.
    BigInt p = rat_floor(lo * q) + 1;
    for (; Rat(p, q) < hi; ++p) {
      if (!(lo < Rat(p, q))) continue;
      if (gcd(abs(p), q) != 1) continue;
      Rat candidate(p, q);
      if (excluded.count(candidate)) continue;
      return candidate;
    }
  }
}

}  // namespace linfinf
