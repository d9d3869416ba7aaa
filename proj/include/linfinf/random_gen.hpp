#pragma once

#include "linfinf/germ.hpp"
#include "linfinf/represent.hpp"
#include "linfinf/simple_fn.hpp"

#include <cstdint>

namespace linfinf {

/// splitmix64; self-contained so seeded runs are byte-identical across
/// platforms and standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool flip() { return below(2) == 1; }

 private:
  std::uint64_t state_;
};

/// Rational in [0,1] with denominator at most max_den.
Rat rand_unit_rat(Rng& rng, int max_den = 8);

/// Small signed rational in [-2, 2].
Rat rand_coeff(Rng& rng);

/// Nonempty interval inside [0,1] (sometimes a point).
Interval rand_interval(Rng& rng);

/// Union of at most max_boxes segments and points: always σ-finite.
Figure2D rand_sigma_finite_figure(Rng& rng, int max_boxes = 3);

/// Arbitrary box union; may contain positive-area boxes.
Figure2D rand_figure(Rng& rng, int max_boxes = 3);

/// σ-finitely supported simple function with at most max_terms terms.
SimpleFunc rand_simple_func(Rng& rng, int max_terms = 3);

LineFunc rand_line_func(Rng& rng);
LineRule rand_line_rule(Rng& rng);

/// Germ with random rules and at most two exceptions per orientation.
Germ rand_germ(Rng& rng);

/// Candidate with random cuts, per-cell affine values, and at most
/// max_overrides line overrides.
CandidateGlobal rand_candidate(Rng& rng, int max_overrides = 2);

}  // namespace linfinf
