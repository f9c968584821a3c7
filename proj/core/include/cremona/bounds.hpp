#pragma once

// Arithmetic certificates for the asymptotic regime of the projection
// search. The re-embedding of a bidegree (a, b) surface with beta appended
// fibers has degree delta = a(2b + beta), and the monoid search succeeds
// once the restricted double-vertex system is forced to be nonempty by a
// dimension count. The count cancels at cubic order exactly when beta grows
// like xi * d / a, where xi is the real root of 2x^3 - 6x^2 + 3x - 2; the
// functions here evaluate that root, the integer fiber-count schedule
// beta = ceil(h * xi), and the sign of every remainder term the cancellation
// leaves behind. Exact rationals are used wherever xi does not enter.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/rational.hpp"
#include "cremona/real.hpp"
#include "cremona/rng.hpp"
#include "cremona/surface.hpp"

namespace cremona {

struct BoundReport {
  Rational lhs;
  Rational rhs;
  Rational margin;  // lhs - rhs
  bool verdict;     // margin > 0, exactly
};

struct RealBoundReport {
  Real lhs;
  Real rhs;
  Real margin;
  bool verdict;
};

// The growth constant: unique real root of 2x^3 - 6x^2 + 3x - 2, evaluated
// through its closed radical form 1 + ((sqrt(7)+3)/4)^(1/3)
// + (2(sqrt(7)+3))^(-1/3). The residual of the cubic at the result is
// checked to 10^-(digits-5) before returning. Requires digits >= 30.
Real xi_constant(int digits);

// Roots a1 < 0 < a2 < 1 of A x^2 + B x - xi with A = 2 xi^2 - 4 xi + 1 and
// B = -3/2 xi^2 + 7/2 xi + 1/2. Every integer ruling degree a >= 1 exceeds
// a2, which is what makes the quadratic remainder positive.
std::pair<Real, Real> positivity_roots(int digits);

struct FiberCountChoice {
  long beta;    // ceil(h * xi)
  Real offset;  // beta - h * xi, strictly inside (0, 1)
};

// Fiber-count schedule at monoid degree d for ruling degree a. Requires
// a >= 1 and a | d with h = d / a >= 1.
FiberCountChoice beta_of(long d, long a, int digits = 50);

// Quadratic remainder of the cancellation:
// (ab + 1/2) d^2 + (-4a^2 b + 7/2 a - 1) beta d + a^2 (2ab - 3/2) beta^2.
// Requires a, b >= 1. Exact.
BoundReport check_quadratic_inequality(long a, long b, long beta, long d);

// Cubic remainder left by the integer rounding beta = h xi + eps:
// (a^3 eps / 6) [3 h^2 (2 xi^2 - 4 xi + 1) + 6 h eps (xi - 1) + 2 eps^2].
// Requires h >= 1 and eps in (0, 1).
RealBoundReport check_cubic_remainder(long h, const Rational& eps_prime, long a,
                                      int digits = 50);

// Assembled dimension inequality at delta = a(2b + beta): the lower bound
// for the cone-free system through the re-embedded surface, plus the
// double-vertex system dimension, must exceed the single-vertex system
// dimension. The surface's section count h0 defaults to the intersection
// theory estimate (delta/2) d^2 - ((a-2)/2) beta d with the linear
// correction dropped; pass the exactly computed restriction rank to replace
// it. Requires a >= 2 and b, beta >= 1. Exact; the verdict is only
// meaningful for d in the asymptotic regime and is reported as evaluated.
BoundReport check_dimension_inequality(long a, long b, long beta, long d,
                                       const std::optional<Rational>& h0 = std::nullopt);

// Smallest h such that the assembled margin at d = a h, beta = beta_of(d, a)
// is positive from h onward as far as the scan reaches. Scans h in
// [1, h_max]; nullopt when the margin is still nonpositive at h_max.
std::optional<long> dimension_threshold(long a, long b, long h_max = 512,
                                        int digits = 50);

struct LinearFit {
  Rational ell;                     // slope of the fitted correction
  Rational m;                       // intercept
  std::vector<Rational> residuals;  // data minus fit, per degree
};

// Least-squares fit of the sub-quadratic part of the exact restriction rank
// of the single-vertex system through Z against ell * d + m, over the
// consecutive degrees [d_lo, d_hi] (at least four of them). Z must be a
// fibered re-embedding in P4 whose invariants determine (a, b, beta).
LinearFit estimate_ell_m(const ParamSurface& Z, int d_lo, int d_hi, Rng& rng);

struct WitnessReport {
  long projection_degree;     // 2 a deg_D
  long scroll_degree;         // 2 deg_B
  Rational projection_ratio;  // 12 / (2 a deg_D), < 1 under the hypotheses
  Rational scroll_ratio;      // 12 / (2 deg_B)
  bool scroll_pair_terminal;  // scroll_ratio < 1, i.e. deg_B >= 7
  std::string branch;         // "terminal-pairs" or "degree-comparison"
  bool cremona_equivalent;    // false: the two projections are inequivalent
};

// Terminal-pair arithmetic separating a general projection of a ruling-a
// embedding over a degree-deg_D divisor from general scroll projections of
// degree 2 deg_B. A general projection to P3 has only a double curve and
// triple points, so its multiplicity is at most three everywhere and the
// pair test reduces to 12/degree < 1. Requires a >= 2, deg_D >= 4,
// deg_B >= 1.
WitnessReport non_equivalence_witness(long a, long deg_D, long deg_B);

}  // namespace cremona
