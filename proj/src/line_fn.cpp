#include "linfinf/line_fn.hpp"

#include <algorithm>
#include <stdexcept>

namespace linfinf {

LineFunc::LineFunc(std::vector<Rat> breaks, std::vector<AffinePiece> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (pieces_.size() != breaks_.size() + 1)
    throw std::invalid_argument("piece count must be break count + 1");
  for (size_t i = 0; i < breaks_.size(); ++i) {
    if (breaks_[i] <= 0 || breaks_[i] >= 1)
      throw std::invalid_argument("breaks must lie strictly inside (0,1)");
    if (i && breaks_[i - 1] >= breaks_[i])
      throw std::invalid_argument("breaks must be strictly increasing");
  }
}

Rat LineFunc::edge(size_t i) const {
  if (i == 0) return 0;
  if (i == pieces_.size()) return 1;
  return breaks_[i - 1];
}

size_t LineFunc::piece_index(const Rat& t) const {
  if (t < 0 || t > 1) throw std::invalid_argument("argument outside [0,1]");
  size_t k = static_cast<size_t>(
      std::upper_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin());
  return k;  // number of breaks <= t
}

namespace {

LineFunc combine(const LineFunc& f, const LineFunc& g, int gsign) {
  std::vector<Rat> breaks = f.breaks();
  breaks.insert(breaks.end(), g.breaks().begin(), g.breaks().end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<AffinePiece> pieces;
  for (size_t i = 0; i <= breaks.size(); ++i) {
    Rat lo = i == 0 ? Rat(0) : breaks[i - 1];
    Rat hi = i == breaks.size() ? Rat(1) : breaks[i];
    Rat mid = (lo + hi) / 2;
    const AffinePiece& p = f.pieces()[f.piece_index(mid)];
    const AffinePiece& q = g.pieces()[g.piece_index(mid)];
    pieces.push_back(AffinePiece{p.a + gsign * q.a, p.b + gsign * q.b});
  }
  return LineFunc(std::move(breaks), std::move(pieces));
}

}  // namespace

LineFunc add_line(const LineFunc& f, const LineFunc& g) { return combine(f, g, 1); }
LineFunc sub_line(const LineFunc& f, const LineFunc& g) { return combine(f, g, -1); }

LineFunc scale_line(const Rat& c, const LineFunc& f) {
  std::vector<AffinePiece> pieces;
  for (const AffinePiece& p : f.pieces()) pieces.push_back(AffinePiece{c * p.a, c * p.b});
  return LineFunc(f.breaks(), std::move(pieces));
}

LineStep LineStep::zero() { return constant(0); }

LineStep LineStep::constant(const Rat& c) {
  return LineStep{{Rat(0), Rat(1)}, {c}, {c, c}};
}

Rat LineStep::value_at(const Rat& t) const {
  auto it = std::lower_bound(cuts.begin(), cuts.end(), t);
  if (it == cuts.end()) throw std::invalid_argument("argument outside [0,1]");
  size_t k = static_cast<size_t>(it - cuts.begin());
  if (*it == t) return point_values[k];
  if (k == 0) throw std::invalid_argument("argument outside [0,1]");
  return open_values[k - 1];
}

bool LineStep::is_zero_ae() const {
  return std::all_of(open_values.begin(), open_values.end(),
                     [](const Rat& v) { return v == 0; });
}

Rat integrate_line(const LineStep& s, const LineFunc& w, const Set1D& over) {
  Rat total = 0;
  for (size_t i = 0; i + 1 < s.cuts.size(); ++i) {
    const Rat& v = s.open_values[i];
    if (v == 0) continue;
    for (size_t j = 0; j < w.pieces().size(); ++j) {
      Rat plo = w.edge(j), phi = w.edge(j + 1);
      for (const Interval& c : over.components()) {
        Rat lo = rat_max(rat_max(s.cuts[i], plo), c.lo());
        Rat hi = rat_min(rat_min(s.cuts[i + 1], phi), c.hi());
        if (lo >= hi) continue;
        const AffinePiece& p = w.pieces()[j];
        total += v * (p.a * (hi - lo) + p.b * (hi * hi - lo * lo) / 2);
      }
    }
  }
  return total;
}

Rat step_abs_integral(const LineStep& s) {
  Rat total = 0;
  for (size_t i = 0; i + 1 < s.cuts.size(); ++i)
    total += rat_abs(s.open_values[i]) * (s.cuts[i + 1] - s.cuts[i]);
  return total;
}

Rat linf_line(const LineFunc& w, const Set1D& over) {
  Rat best = 0;
  for (const Interval& c : over.components()) {
    if (c.is_point()) continue;
    for (size_t j = 0; j < w.pieces().size(); ++j) {
      Rat lo = rat_max(w.edge(j), c.lo());
      Rat hi = rat_min(w.edge(j + 1), c.hi());
      if (lo >= hi) continue;
      const AffinePiece& p = w.pieces()[j];
      best = rat_max(best, rat_max(rat_abs(p.at(lo)), rat_abs(p.at(hi))));
    }
  }
  return best;
}

Set1D superlevel_ge(const LineFunc& w, const Rat& tau) {
  std::vector<Interval> parts;
  for (size_t j = 0; j < w.pieces().size(); ++j) {
    Rat lo = w.edge(j), hi = w.edge(j + 1);
    const AffinePiece& p = w.pieces()[j];
    if (p.b == 0) {
      if (p.a >= tau) parts.push_back(Interval::closed(lo, hi));
      continue;
    }
    Rat root = (tau - p.a) / p.b;
    Rat slo = lo, shi = hi;
    if (p.b > 0) {
      slo = rat_max(lo, root);
    } else {
      shi = rat_min(hi, root);
    }
    if (slo <= shi) parts.push_back(Interval::closed(slo, shi));
  }
  return Set1D(std::move(parts));
}

Set1D superlevel_gt_exact(const LineFunc& w, const Rat& q) {
  std::vector<Interval> parts;
  for (size_t j = 0; j < w.pieces().size(); ++j) {
    bool last = j + 1 == w.pieces().size();
    // piece domain: [edge(j), edge(j+1)) and [.,1] for the last piece
    Boundary dom_s{w.edge(j), Boundary::kAt};
    Boundary dom_e{w.edge(j + 1), last ? Boundary::kAt : Boundary::kBelow};
    const AffinePiece& p = w.pieces()[j];
    if (p.b == 0) {
      if (p.a > q) {
        if (auto iv = Interval::from_boundaries(dom_s, dom_e)) parts.push_back(*iv);
      }
      continue;
    }
    Rat root = (q - p.a) / p.b;
    Boundary s = dom_s, e = dom_e;
    if (p.b > 0) {
      Boundary cut{root, Boundary::kAbove};  // t > root
      if (s < cut) s = cut;
    } else {
      Boundary cut{root, Boundary::kBelow};  // t < root
      if (cut < e) e = cut;
    }
    if (auto iv = Interval::from_boundaries(s, e)) parts.push_back(*iv);
  }
  return Set1D(std::move(parts));
}

std::optional<Interval> nonzero_subinterval(const Rat& lo, const Rat& hi, const Rat& a,
                                            const Rat& b) {
  if (a == 0 && b == 0) return std::nullopt;
  if (b == 0) return Interval::open(lo, hi);
  Rat root = -a / b;
  if (root <= lo || root >= hi) return Interval::open(lo, hi);
  Rat left = root - lo, right = hi - root;
  if (left >= right) return Interval::open(lo, root);
  return Interval::open(root, hi);
}

std::optional<Interval> first_ae_difference(const LineFunc& f, const LineFunc& g,
                                            const Set1D& over) {
  LineFunc d = sub_line(f, g);
  for (const Interval& c : over.components()) {
    if (c.is_point()) continue;
    for (size_t j = 0; j < d.pieces().size(); ++j) {
      Rat lo = rat_max(d.edge(j), c.lo());
      Rat hi = rat_min(d.edge(j + 1), c.hi());
      if (lo >= hi) continue;
      const AffinePiece& p = d.pieces()[j];
      if (auto iv = nonzero_subinterval(lo, hi, p.a, p.b)) return iv;
    }
  }
  return std::nullopt;
}

}  // namespace linfinf
