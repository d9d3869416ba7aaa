#pragma once

#include "linfinf/set1d.hpp"

#include <optional>
#include <vector>

namespace linfinf {

enum class Orientation { Vertical, Horizontal };

inline const char* orientation_name(Orientation o) {
  return o == Orientation::Vertical ? "vertical" : "horizontal";
}

/// t -> a + b*t
struct AffinePiece {
  Rat a;
  Rat b;

  Rat at(const Rat& t) const { return a + b * t; }

  friend bool operator==(const AffinePiece& p, const AffinePiece& q) {
    return p.a == q.a && p.b == q.b;
  }
};

/// Piecewise-affine function on [0,1]. Interior breaks split [0,1] into
/// breaks()+1 pieces; piece i lives on [edge(i), edge(i+1)), the last piece
/// is closed at 1. Pointwise values at piece edges follow that convention;
/// all measure-level operations ignore the λ-null edge set anyway.
class LineFunc {
 public:
  LineFunc(std::vector<Rat> breaks, std::vector<AffinePiece> pieces);

  static LineFunc constant(Rat c) { return LineFunc({}, {AffinePiece{std::move(c), 0}}); }
  static LineFunc zero() { return constant(0); }
  /// t -> t
  static LineFunc coordinate() { return LineFunc({}, {AffinePiece{0, 1}}); }

  const std::vector<Rat>& breaks() const { return breaks_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }

  /// edge(0)=0, edge(i)=breaks[i-1], edge(pieces.size())=1
  Rat edge(size_t i) const;
  size_t piece_index(const Rat& t) const;
  Rat value_at(const Rat& t) const { return pieces_[piece_index(t)].at(t); }

  friend bool operator==(const LineFunc& f, const LineFunc& g) {
    return f.breaks_ == g.breaks_ && f.pieces_ == g.pieces_;
  }

 private:
  std::vector<Rat> breaks_;          // strictly increasing, inside (0,1)
  std::vector<AffinePiece> pieces_;  // breaks_.size() + 1
};

LineFunc add_line(const LineFunc& f, const LineFunc& g);
LineFunc sub_line(const LineFunc& f, const LineFunc& g);
LineFunc scale_line(const Rat& c, const LineFunc& f);

/// Piecewise-constant function on [0,1] with pointwise exceptions at the
/// cuts. cuts.front()=0, cuts.back()=1; open_values[i] holds on
/// (cuts[i], cuts[i+1]), point_values[i] at cuts[i].
struct LineStep {
  std::vector<Rat> cuts;
  std::vector<Rat> open_values;
  std::vector<Rat> point_values;

  static LineStep zero();
  static LineStep constant(const Rat& c);
  Rat value_at(const Rat& t) const;
  bool is_zero_ae() const;
};

/// ∫ s(t)·w(t) dt over `over`; point exceptions are λ-null and ignored.
Rat integrate_line(const LineStep& s, const LineFunc& w, const Set1D& over);

/// ∫ |s(t)| dt over [0,1].
Rat step_abs_integral(const LineStep& s);

/// λ-essential sup of |w| over `over`; 0 when λ(over) = 0. Affine pieces
/// attain extrema at interval endpoints, so this is a corner evaluation.
Rat linf_line(const LineFunc& w, const Set1D& over);

/// {t : w(t) >= tau} up to λ-null edge effects (solved on piece closures).
Set1D superlevel_ge(const LineFunc& w, const Rat& tau);

/// Exact pointwise {t : w(t) > q} honoring the half-open piece convention.
Set1D superlevel_gt_exact(const LineFunc& w, const Rat& q);

/// Positive-length open interval inside (lo,hi) on which a + b·t has no
/// root; nullopt when a = b = 0. Root inside splits the interval: the wider
/// half wins, ties go left.
std::optional<Interval> nonzero_subinterval(const Rat& lo, const Rat& hi, const Rat& a,
                                            const Rat& b);

/// First positive-length interval inside `over` where f and g differ
/// pointwise; nullopt when f = g λ-a.e. on `over`.
std::optional<Interval> first_ae_difference(const LineFunc& f, const LineFunc& g,
                                            const Set1D& over);

inline bool eq_ae_line(const LineFunc& f, const LineFunc& g, const Set1D& over) {
  return !first_ae_difference(f, g, over).has_value();
}

}  // namespace linfinf
