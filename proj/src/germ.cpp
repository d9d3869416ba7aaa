#include "linfinf/germ.hpp"

#include <algorithm>

namespace linfinf {

LineRule::LineRule(std::vector<Rat> breaks, std::vector<RulePiece> pieces)
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

Rat LineRule::edge(size_t i) const {
  if (i == 0) return 0;
  if (i == pieces_.size()) return 1;
  return breaks_[i - 1];
}

LineFunc LineRule::at_line(const Rat& s) const {
  std::vector<AffinePiece> pieces;
  for (const RulePiece& p : pieces_) pieces.push_back(p.at_line(s));
  return LineFunc(breaks_, std::move(pieces));
}

Rat LineRule::sup_abs() const {
  Rat best = 0;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    const RulePiece& p = pieces_[i];
    for (int s = 0; s <= 1; ++s) {
      for (const Rat& t : {edge(i), edge(i + 1)}) {
        best = rat_max(best, rat_abs(p.value(s, t)));
      }
    }
  }
  return best;
}

namespace {

LineRule combine_rules(const LineRule& f, const LineRule& g, int gsign) {
  std::vector<Rat> breaks = f.breaks();
  breaks.insert(breaks.end(), g.breaks().begin(), g.breaks().end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  auto piece_at = [](const LineRule& r, const Rat& mid) -> const RulePiece& {
    size_t k = static_cast<size_t>(
        std::upper_bound(r.breaks().begin(), r.breaks().end(), mid) - r.breaks().begin());
    return r.pieces()[k];
  };
  std::vector<RulePiece> pieces;
  for (size_t i = 0; i <= breaks.size(); ++i) {
    Rat lo = i == 0 ? Rat(0) : breaks[i - 1];
    Rat hi = i == breaks.size() ? Rat(1) : breaks[i];
    Rat mid = (lo + hi) / 2;
    const RulePiece& p = piece_at(f, mid);
    const RulePiece& q = piece_at(g, mid);
    pieces.push_back(RulePiece{p.a0 + gsign * q.a0, p.a1 + gsign * q.a1,
                               p.b0 + gsign * q.b0, p.b1 + gsign * q.b1});
  }
  return LineRule(std::move(breaks), std::move(pieces));
}

}  // namespace

LineRule add_rule(const LineRule& f, const LineRule& g) { return combine_rules(f, g, 1); }

LineRule scale_rule(const Rat& c, const LineRule& f) {
  std::vector<RulePiece> pieces;
  for (const RulePiece& p : f.pieces())
    pieces.push_back(RulePiece{c * p.a0, c * p.a1, c * p.b0, c * p.b1});
  return LineRule(f.breaks(), std::move(pieces));
}

Germ::Germ(LineRule vertical, LineRule horizontal, LineMap vertical_exceptions,
           LineMap horizontal_exceptions)
    : vertical_(std::move(vertical)),
      horizontal_(std::move(horizontal)),
      vexc_(std::move(vertical_exceptions)),
      hexc_(std::move(horizontal_exceptions)) {
  for (const LineMap* m : {&vexc_, &hexc_}) {
    for (const auto& [key, fn] : *m) {
      if (key < 0 || key > 1) throw std::invalid_argument("exception line outside [0,1]");
    }
  }
}

LineFunc Germ::line_function(Orientation o, const Rat& s) const {
  const LineMap& exc = exceptions(o);
  auto it = exc.find(s);
  if (it != exc.end()) return it->second;
  return rule(o).at_line(s);
}

Germ coordinate_germ() { return Germ(LineRule::coordinate(), LineRule::coordinate()); }

Rat RestrictedGerm::value_at(const Rat& x, const Rat& y) const {
  bool on_v = vertical.count(x) > 0;
  bool on_h = horizontal.count(y) > 0;
  if (on_v && on_h) return 0;  // crossing convention
  if (on_v) return vertical.at(x).value_at(y);
  if (on_h) return horizontal.at(y).value_at(x);
  return 0;
}

RestrictedGerm restrict_germ(const Germ& g, const Figure2D& a) {
  CriticalLines cl = critical_lines(a);
  if (cl.has_area_box()) throw NotSigmaFinite("set contains a positive-area box");
  RestrictedGerm out;
  for (const Rat& x : cl.vertical_points)
    out.vertical.emplace(x, g.line_function(Orientation::Vertical, x));
  for (const Rat& y : cl.horizontal_points)
    out.horizontal.emplace(y, g.line_function(Orientation::Horizontal, y));
  return out;
}

Rat germ_norm(const Germ& g) {
  Rat best = rat_max(g.rule(Orientation::Vertical).sup_abs(),
                     g.rule(Orientation::Horizontal).sup_abs());
  for (Orientation o : {Orientation::Vertical, Orientation::Horizontal}) {
    for (const auto& [key, fn] : g.exceptions(o))
      best = rat_max(best, linf_line(fn, Set1D::full()));
  }
  return best;
}

Germ add_germ(const Germ& g, const Germ& h) {
  LineRule v = add_rule(g.rule(Orientation::Vertical), h.rule(Orientation::Vertical));
  LineRule ho = add_rule(g.rule(Orientation::Horizontal), h.rule(Orientation::Horizontal));
  auto merge = [&](Orientation o) {
    LineMap out;
    for (const LineMap* src : {&g.exceptions(o), &h.exceptions(o)}) {
      for (const auto& [key, fn] : *src) {
        if (!out.count(key))
          out.emplace(key, add_line(g.line_function(o, key), h.line_function(o, key)));
      }
    }
    return out;
  };
  return Germ(std::move(v), std::move(ho), merge(Orientation::Vertical),
              merge(Orientation::Horizontal));
}

Germ scale_germ(const Rat& c, const Germ& g) {
  auto scale_map = [&](const LineMap& m) {
    LineMap out;
    for (const auto& [key, fn] : m) out.emplace(key, scale_line(c, fn));
    return out;
  };
  return Germ(scale_rule(c, g.rule(Orientation::Vertical)),
              scale_rule(c, g.rule(Orientation::Horizontal)),
              scale_map(g.exceptions(Orientation::Vertical)),
              scale_map(g.exceptions(Orientation::Horizontal)));
}

namespace {

// Rules agree as coefficient tuples on the common break refinement. Affine
// s-dependence means per-line a.e. agreement off finitely many lines forces
// exactly this.
bool rules_eq(const LineRule& f, const LineRule& g) {
  std::vector<Rat> breaks = f.breaks();
  breaks.insert(breaks.end(), g.breaks().begin(), g.breaks().end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  auto piece_at = [](const LineRule& r, const Rat& mid) -> const RulePiece& {
    size_t k = static_cast<size_t>(
        std::upper_bound(r.breaks().begin(), r.breaks().end(), mid) - r.breaks().begin());
    return r.pieces()[k];
  };
  for (size_t i = 0; i <= breaks.size(); ++i) {
    Rat lo = i == 0 ? Rat(0) : breaks[i - 1];
    Rat hi = i == breaks.size() ? Rat(1) : breaks[i];
    Rat mid = (lo + hi) / 2;
    if (!(piece_at(f, mid) == piece_at(g, mid))) return false;
  }
  return true;
}

}  // namespace

bool eq_ae_germ(const Germ& g, const Germ& h) {
  for (Orientation o : {Orientation::Vertical, Orientation::Horizontal}) {
    if (!rules_eq(g.rule(o), h.rule(o))) return false;
    std::vector<Rat> keys;
    for (const auto& [key, fn] : g.exceptions(o)) keys.push_back(key);
    for (const auto& [key, fn] : h.exceptions(o)) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const Rat& key : keys) {
      if (!eq_ae_line(g.line_function(o, key), h.line_function(o, key), Set1D::full()))
        return false;
    }
  }
  return true;
}

std::optional<ConsistencyWitness> consistency_check(const RawGermTable& table) {
  for (const GermTableEntry& e : table.entries) {
    if (!sigma_finite(e.set)) throw NotSigmaFinite("table entry is not σ-finite");
  }
  auto line_or_zero = [](const LineMap& m, const Rat& key) {
    auto it = m.find(key);
    return it != m.end() ? it->second : LineFunc::zero();
  };
  for (size_t i = 0; i < table.entries.size(); ++i) {
    for (size_t j = i + 1; j < table.entries.size(); ++j) {
      const GermTableEntry& ei = table.entries[i];
      const GermTableEntry& ej = table.entries[j];
      CriticalLines ci = critical_lines(ei.set);
      CriticalLines cj = critical_lines(ej.set);
      for (Orientation o : {Orientation::Vertical, Orientation::Horizontal}) {
        const auto& pi = o == Orientation::Vertical ? ci.vertical_points : ci.horizontal_points;
        const auto& pj = o == Orientation::Vertical ? cj.vertical_points : cj.horizontal_points;
        std::vector<Rat> shared;
        std::set_intersection(pi.begin(), pi.end(), pj.begin(), pj.end(),
                              std::back_inserter(shared));
        for (const Rat& line : shared) {
          Set1D si = o == Orientation::Vertical ? ei.set.vertical_section(line)
                                                : ei.set.horizontal_section(line);
          Set1D sj = o == Orientation::Vertical ? ej.set.vertical_section(line)
                                                : ej.set.horizontal_section(line);
          Set1D common = set_intersect(si, sj);
          const LineMap& mi = o == Orientation::Vertical ? ei.fn.vertical : ei.fn.horizontal;
          const LineMap& mj = o == Orientation::Vertical ? ej.fn.vertical : ej.fn.horizontal;
          auto diff =
              first_ae_difference(line_or_zero(mi, line), line_or_zero(mj, line), common);
          if (diff) return ConsistencyWitness{i, j, o, line, *diff};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace linfinf
