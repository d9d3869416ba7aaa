#include "linfinf/represent.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace linfinf {

CandidateGlobal::CandidateGlobal(AxisAtoms x, AxisAtoms y,
                                 std::vector<std::vector<CellAffine>> cells,
                                 LineMap vertical_overrides, LineMap horizontal_overrides)
    : x_(std::move(x)),
      y_(std::move(y)),
      cells_(std::move(cells)),
      vover_(std::move(vertical_overrides)),
      hover_(std::move(horizontal_overrides)) {
  if (cells_.size() != y_.count()) throw std::invalid_argument("cell row count mismatch");
  for (const auto& row : cells_) {
    if (row.size() != x_.count()) throw std::invalid_argument("cell column count mismatch");
  }
  for (const LineMap* m : {&vover_, &hover_}) {
    for (const auto& [key, fn] : *m) {
      if (key < 0 || key > 1) throw std::invalid_argument("override line outside [0,1]");
    }
  }
}

CandidateGlobal CandidateGlobal::uniform(CellAffine v, LineMap vertical_overrides,
                                         LineMap horizontal_overrides) {
  AxisAtoms ax = AxisAtoms::from_values({});
  std::vector<std::vector<CellAffine>> cells(ax.count(),
                                             std::vector<CellAffine>(ax.count(), v));
  return CandidateGlobal(ax, ax, std::move(cells), std::move(vertical_overrides),
                         std::move(horizontal_overrides));
}

Rat CandidateGlobal::value_at(const Rat& x, const Rat& y) const {
  if (auto it = vover_.find(x); it != vover_.end()) return it->second.value_at(y);
  if (auto it = hover_.find(y); it != hover_.end()) return it->second.value_at(x);
  return cell(x_.locate(x), y_.locate(y)).at(x, y);
}

LineFunc CandidateGlobal::trace(Orientation o, const Rat& s) const {
  const LineMap& over = overrides(o);
  if (auto it = over.find(s); it != over.end()) return it->second;
  const AxisAtoms& along = o == Orientation::Vertical ? y_ : x_;
  std::vector<Rat> breaks(along.values().begin() + 1, along.values().end() - 1);
  std::vector<AffinePiece> pieces;
  if (o == Orientation::Vertical) {
    size_t i = x_.locate(s);
    for (size_t j = 1; j < y_.count(); j += 2) {
      const CellAffine& c = cell(i, j);
      pieces.push_back(AffinePiece{c.a + c.b * s, c.c});
    }
  } else {
    size_t j = y_.locate(s);
    for (size_t i = 1; i < x_.count(); i += 2) {
      const CellAffine& c = cell(i, j);
      pieces.push_back(AffinePiece{c.a + c.c * s, c.b});
    }
  }
  return LineFunc(std::move(breaks), std::move(pieces));
}

namespace {

// Zero set of p0 + p1*s restricted to a line's index range: everything, one
// root, or nothing.
struct AffineZeros {
  bool everything = false;
  std::optional<Rat> root;
};

AffineZeros zeros_of(const Rat& p0, const Rat& p1) {
  AffineZeros z;
  if (p1 == 0) {
    z.everything = p0 == 0;
  } else {
    z.root = -p0 / p1;
  }
  return z;
}

// Lines inside (lo,hi) where BOTH affines vanish; identical = both vanish for
// every line (the candidate matches the rule across the whole cell).
struct MatchSet {
  bool identical = false;
  std::set<Rat> points;
};

MatchSet match_lines(const Rat& e1c, const Rat& e1s, const Rat& e2c, const Rat& e2s,
                     const Rat& lo, const Rat& hi) {
  AffineZeros z1 = zeros_of(e1c, e1s);
  AffineZeros z2 = zeros_of(e2c, e2s);
  MatchSet m;
  if (z1.everything && z2.everything) {
    m.identical = true;
    return m;
  }
  auto add = [&](const Rat& r) {
    if (r > lo && r < hi) m.points.insert(r);
  };
  if (z1.everything) {
    if (z2.root) add(*z2.root);
  } else if (z2.everything) {
    if (z1.root) add(*z1.root);
  } else if (z1.root && z2.root && *z1.root == *z2.root) {
    add(*z1.root);
  }
  return m;
}

std::set<Rat> keys_of(const LineMap& m) {
  std::set<Rat> out;
  for (const auto& [key, fn] : m) out.insert(key);
  return out;
}

}  // namespace

ReprVerdict represents(const CandidateGlobal& g, const Germ& germ) {
  const AxisAtoms& xa = g.xatoms();
  const AxisAtoms& ya = g.yatoms();

  // Positive-area cells, vertical requirement: for a.e. vertical line x
  // through the cell, the trace (a + b*x) + c*t must match the rule
  // (a0 + a1*x) + (b0 + b1*x)*t on every overlapping rule piece.
  auto area_check = [&](Orientation o) -> std::optional<ReprWitness> {
    const LineRule& rule = germ.rule(o);
    const AxisAtoms& across = o == Orientation::Vertical ? xa : ya;  // line index axis
    const AxisAtoms& along = o == Orientation::Vertical ? ya : xa;   // coordinate axis
    for (size_t i = 1; i < across.count(); i += 2) {
      Rat u = across.values()[(i - 1) / 2], v = across.values()[(i + 1) / 2];
      for (size_t j = 1; j < along.count(); j += 2) {
        Rat w = along.values()[(j - 1) / 2], z = along.values()[(j + 1) / 2];
        const CellAffine& c =
            o == Orientation::Vertical ? g.cell(i, j) : g.cell(j, i);
        Rat tc = o == Orientation::Vertical ? c.c : c.b;   // coefficient along the line
        Rat sc = o == Orientation::Vertical ? c.b : c.c;   // coefficient across lines
        std::set<Rat> excluded = keys_of(g.overrides(o));
        std::set<Rat> germ_exc = keys_of(germ.exceptions(o));
        excluded.insert(germ_exc.begin(), germ_exc.end());
        bool fails = false;
        for (size_t k = 0; k < rule.pieces().size(); ++k) {
          if (rat_max(rule.edge(k), w) >= rat_min(rule.edge(k + 1), z)) continue;
          const RulePiece& p = rule.pieces()[k];
          MatchSet m = match_lines(c.a - p.a0, sc - p.a1, tc - p.b0, -p.b1, u, v);
          if (m.identical) continue;
          fails = true;
          excluded.insert(m.points.begin(), m.points.end());
        }
        if (!fails) continue;
        Rat star = smallest_denominator_in(u, v, excluded);
        LineFunc lhs = g.trace(o, star);
        LineFunc rhs = germ.line_function(o, star);
        auto d = first_ae_difference(lhs, rhs, Set1D({Interval::open(w, z)}));
        if (!d) continue;  // defensive; a difference must exist off the match set
        Interval seg = Interval::closed(w, z);
        Figure2D set = o == Orientation::Vertical ? Figure2D::vseg(star, seg)
                                                  : Figure2D::hseg(seg, star);
        return ReprWitness{set, o, star, *d, lhs, rhs};
      }
    }
    return std::nullopt;
  };

  if (auto w = area_check(Orientation::Vertical)) return ReprVerdict{w};
  if (auto w = area_check(Orientation::Horizontal)) return ReprVerdict{w};

  // Individual lines: cell edges, candidate overrides, germ exceptions. Each
  // single line is σ-finite with positive measure, so the demand applies
  // there exactly, not just a.e. across lines.
  auto line_check = [&](Orientation o) -> std::optional<ReprWitness> {
    const AxisAtoms& across = o == Orientation::Vertical ? xa : ya;
    std::set<Rat> lines(across.values().begin(), across.values().end());
    for (const auto& [key, fn] : g.overrides(o)) lines.insert(key);
    for (const auto& [key, fn] : germ.exceptions(o)) lines.insert(key);
    for (const Rat& s : lines) {
      LineFunc lhs = g.trace(o, s);
      LineFunc rhs = germ.line_function(o, s);
      auto d = first_ae_difference(lhs, rhs, Set1D::full());
      if (!d) continue;
      Interval seg = Interval::full();
      Figure2D set = o == Orientation::Vertical ? Figure2D::vseg(s, seg)
                                                : Figure2D::hseg(seg, s);
      return ReprWitness{set, o, s, *d, lhs, rhs};
    }
    return std::nullopt;
  };

  if (auto w = line_check(Orientation::Vertical)) return ReprVerdict{w};
  if (auto w = line_check(Orientation::Horizontal)) return ReprVerdict{w};
  return ReprVerdict{std::nullopt};
}

bool verify_witness(const CandidateGlobal& g, const Germ& germ, const ReprWitness& w) {
  if (!sigma_finite(w.set)) return false;
  if (!(w.where.length() > 0)) return false;

  Set1D section = w.orientation == Orientation::Vertical
                      ? w.set.vertical_section(w.line)
                      : w.set.horizontal_section(w.line);
  Set1D inside = set_intersect(section, Set1D({w.where}));
  if (inside.lebesgue() != w.where.length()) return false;

  RestrictedGerm r = restrict_germ(germ, w.set);
  const LineMap& m = w.orientation == Orientation::Vertical ? r.vertical : r.horizontal;
  auto it = m.find(w.line);
  if (it == m.end()) return false;
  const LineFunc& germ_line = it->second;

  // Pointwise sample of the open interval, skipping opposite-orientation
  // override keys where value_at legitimately departs from the trace.
  const LineMap& cross = g.overrides(w.orientation == Orientation::Vertical
                                         ? Orientation::Horizontal
                                         : Orientation::Vertical);
  int checked = 0;
  for (int k = 1; k <= 9; ++k) {
    Rat t = w.where.lo() + k * w.where.length() / 10;
    if (cross.count(t)) continue;
    Rat cand = w.orientation == Orientation::Vertical ? g.value_at(w.line, t)
                                                      : g.value_at(t, w.line);
    if (cand != w.lhs.value_at(t)) return false;
    if (germ_line.value_at(t) != w.rhs.value_at(t)) return false;
    if (cand == germ_line.value_at(t)) return false;
    ++checked;
  }
  return checked > 0;
}

NonReprReport exhaustive_nonrepresentability(const Germ& germ,
                                             const std::vector<CandidateGlobal>& battery) {
  NonReprReport report;
  report.all_witnessed = true;
  for (size_t idx = 0; idx < battery.size(); ++idx) {
    ReprVerdict v = represents(battery[idx], germ);
    bool verified = v.witness && verify_witness(battery[idx], germ, *v.witness);
    if (!verified) report.all_witnessed = false;
    report.entries.push_back(NonReprEntry{idx, std::move(v), verified});
  }
  return report;
}

std::vector<CandidateGlobal> standard_battery() {
  const std::vector<Rat> coeffs{rat(-1), rat(-1, 2), rat(0), rat(1, 2), rat(1)};
  std::vector<CandidateGlobal> out;
  for (const Rat& a : coeffs) {
    for (const Rat& b : coeffs) {
      for (const Rat& c : coeffs) {
        out.push_back(CandidateGlobal::uniform(CellAffine{a, b, c}));
      }
    }
  }
  return out;
}

}  // namespace linfinf
