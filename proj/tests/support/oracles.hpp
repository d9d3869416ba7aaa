#pragma once

// Independent reference computations for the test suites. Everything here
// reaches the answer through a different route than the library: midpoint
// quadrature instead of antiderivatives, endpoint enumeration instead of
// boundary sweeps, raw span merging instead of canonical interval algebra.

#include "linfinf/germ.hpp"
#include "linfinf/measure.hpp"
#include "linfinf/simple_fn.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracles {

using namespace linfinf;

// All reduced p/q in [0,1] with q <= max_den.
inline std::vector<Rat> farey(int max_den) {
  std::set<Rat> pts;
  for (int q = 1; q <= max_den; ++q) {
    for (int p = 0; p <= q; ++p) pts.insert(Rat(p, q));
  }
  return {pts.begin(), pts.end()};
}

// The given coordinates plus a midpoint between each consecutive pair, with
// 0 and 1 always present. Membership of a box figure is constant between
// consecutive endpoint coordinates, so these probes decide it everywhere.
inline std::vector<Rat> relevant_probes(std::vector<Rat> values) {
  values.push_back(0);
  values.push_back(1);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Rat> out = values;
  for (size_t i = 0; i + 1 < values.size(); ++i)
    out.push_back((values[i] + values[i + 1]) / 2);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Rat> x_endpoints(const Figure2D& a) {
  std::vector<Rat> out;
  for (const Box& b : a.boxes()) {
    out.push_back(b.x.lo());
    out.push_back(b.x.hi());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Rat> y_endpoints(const Figure2D& a) {
  std::vector<Rat> out;
  for (const Box& b : a.boxes()) {
    out.push_back(b.y.lo());
    out.push_back(b.y.hi());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Total length of a union of raw (lo, hi) spans; endpoint flags cannot
// change the answer, so the merge works on bare pairs.
inline Rat merged_length(std::vector<std::pair<Rat, Rat>> spans) {
  std::sort(spans.begin(), spans.end());
  Rat total = 0;
  size_t i = 0;
  while (i < spans.size()) {
    Rat lo = spans[i].first, hi = spans[i].second;
    ++i;
    while (i < spans.size() && spans[i].first <= hi) {
      hi = std::max(hi, spans[i].second);
      ++i;
    }
    total += hi - lo;
  }
  return total;
}

// Length of the vertical (or horizontal) section at `at`, straight off the
// box list.
inline Rat section_length_oracle(const Figure2D& a, bool vertical, const Rat& at) {
  std::vector<std::pair<Rat, Rat>> spans;
  for (const Box& b : a.boxes()) {
    const Interval& across = vertical ? b.x : b.y;
    const Interval& along = vertical ? b.y : b.x;
    if (across.contains(at)) spans.emplace_back(along.lo(), along.hi());
  }
  return merged_length(std::move(spans));
}

inline bool sigma_finite_oracle(const Figure2D& a) {
  for (const Box& b : a.boxes()) {
    if (!b.x.is_point() && !b.y.is_point()) return false;
  }
  return true;
}

// Section-sum measure by endpoint enumeration: positive-length sections can
// only sit at box endpoint coordinates unless the figure holds a
// positive-area box, which a midpoint probe between endpoints exposes.
inline ExtRat mu_oracle(const Figure2D& a, MeasureKind kind) {
  std::vector<Rat> xs = x_endpoints(a);
  std::vector<Rat> ys = y_endpoints(a);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    if (section_length_oracle(a, true, (xs[i] + xs[i + 1]) / 2) > 0) return ExtRat::inf();
  }
  for (size_t i = 0; i + 1 < ys.size(); ++i) {
    if (section_length_oracle(a, false, (ys[i] + ys[i + 1]) / 2) > 0) return ExtRat::inf();
  }
  Rat total = 0;
  if (kind == MeasureKind::Grid) {
    for (const Rat& x : xs) total += section_length_oracle(a, true, x);
  }
  for (const Rat& y : ys) total += section_length_oracle(a, false, y);
  return ExtRat::of(total);
}

// Essential sup of |w| over all of [0,1] via piece-closure endpoints.
inline Rat linf_full_line_oracle(const LineFunc& w) {
  Rat best = 0;
  for (size_t i = 0; i < w.pieces().size(); ++i) {
    best = std::max(best, rat_abs(w.pieces()[i].at(w.edge(i))));
    best = std::max(best, rat_abs(w.pieces()[i].at(w.edge(i + 1))));
  }
  return best;
}

// The germ norm as a sup over instantiated lines. Rule coefficients are
// affine in the line index, so the per-line sup is a max of convex functions
// of s and peaks at s = 0 or s = 1; exceptions replace only finitely many
// lines and cannot lower that sup.
inline Rat germ_norm_oracle(const Germ& g) {
  Rat best = 0;
  for (Orientation o : {Orientation::Vertical, Orientation::Horizontal}) {
    best = std::max(best, linf_full_line_oracle(g.rule(o).at_line(0)));
    best = std::max(best, linf_full_line_oracle(g.rule(o).at_line(1)));
    for (const auto& [at, fn] : g.exceptions(o)) {
      best = std::max(best, linf_full_line_oracle(fn));
    }
  }
  return best;
}

// Exact midpoint rule: between consecutive cuts the integrand must be affine
// (the callers cut at every discontinuity and break), and the integral of an
// affine function is its midpoint value times the length.
inline Rat midpoint_integral(std::vector<Rat> cuts,
                             const std::function<Rat(const Rat&)>& integrand) {
  cuts.push_back(0);
  cuts.push_back(1);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Rat total = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] < 0 || cuts[i + 1] > 1) continue;
    total += (cuts[i + 1] - cuts[i]) * integrand((cuts[i] + cuts[i + 1]) / 2);
  }
  return total;
}

// True when |f| carries positive area: some open cell between endpoint
// coordinates has a nonzero value at its midpoint.
inline bool support_has_area_oracle(const SimpleFunc& f) {
  std::vector<Box> boxes;
  for (const Term& t : f.terms()) {
    for (const Box& b : t.figure.boxes()) boxes.push_back(b);
  }
  Figure2D shape(std::move(boxes));
  std::vector<Rat> xs = x_endpoints(shape);
  std::vector<Rat> ys = y_endpoints(shape);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    for (size_t j = 0; j + 1 < ys.size(); ++j) {
      if (f.value_at((xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2) != 0) return true;
    }
  }
  return false;
}

inline ExtRat l1_oracle(const SimpleFunc& f, MeasureKind kind) {
  if (support_has_area_oracle(f)) return ExtRat::inf();
  Figure2D shape;
  {
    std::vector<Box> boxes;
    for (const Term& t : f.terms()) {
      for (const Box& b : t.figure.boxes()) boxes.push_back(b);
    }
    shape = Figure2D(std::move(boxes));
  }
  std::vector<Rat> xs = x_endpoints(shape);
  std::vector<Rat> ys = y_endpoints(shape);
  Rat total = 0;
  if (kind == MeasureKind::Grid) {
    for (const Rat& x : xs) {
      total += midpoint_integral(y_endpoints(shape),
                                 [&](const Rat& t) { return rat_abs(f.value_at(x, t)); });
    }
  }
  for (const Rat& y : ys) {
    total += midpoint_integral(x_endpoints(shape),
                               [&](const Rat& t) { return rat_abs(f.value_at(t, y)); });
  }
  return ExtRat::of(total);
}

// The pairing by midpoint quadrature over every candidate critical line of
// f's support. Only valid for sigma-finitely supported f.
inline Rat pairing_oracle(const Germ& g, const SimpleFunc& f, MeasureKind kind) {
  Figure2D shape;
  {
    std::vector<Box> boxes;
    for (const Term& t : f.terms()) {
      for (const Box& b : t.figure.boxes()) boxes.push_back(b);
    }
    shape = Figure2D(std::move(boxes));
  }
  Rat total = 0;
  if (kind == MeasureKind::Grid) {
    for (const Rat& x : x_endpoints(shape)) {
      LineFunc w = g.line_function(Orientation::Vertical, x);
      std::vector<Rat> cuts = y_endpoints(shape);
      cuts.insert(cuts.end(), w.breaks().begin(), w.breaks().end());
      total += midpoint_integral(std::move(cuts), [&](const Rat& t) {
        return f.value_at(x, t) * w.value_at(t);
      });
    }
  }
  for (const Rat& y : y_endpoints(shape)) {
    LineFunc w = g.line_function(Orientation::Horizontal, y);
    std::vector<Rat> cuts = x_endpoints(shape);
    cuts.insert(cuts.end(), w.breaks().begin(), w.breaks().end());
    total += midpoint_integral(std::move(cuts), [&](const Rat& t) {
      return f.value_at(t, y) * w.value_at(t);
    });
  }
  return total;
}

}  // namespace oracles
