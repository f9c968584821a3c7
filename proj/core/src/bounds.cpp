#include "cremona/bounds.hpp"

#include <stdexcept>

#include "cremona/monoid.hpp"

namespace cremona {

namespace {

Rational rq(long v) { return Rational(v); }

// delta d^2 - (delta^2 - 3 delta) d + delta^3/3 - 3/2 delta^2 + 13/6 delta,
// the cone-complement part of the lower bound at projection degree delta.
Rational cone_complement_terms(const Rational& delta, const Rational& d) {
  Rational d2 = d * d;
  return delta * d2 - (delta * delta - rq(3) * delta) * d +
         delta * delta * delta / rq(3) - rat(3, 2) * delta * delta +
         rat(13, 6) * delta;
}

}  // namespace

Real xi_constant(int digits) {
  if (digits < 30) throw std::invalid_argument("the constant needs at least 30 digits");
  Real seven(7, digits);
  Real core = seven.sqrt() + Real(3, digits);  // sqrt(7) + 3
  Real xi = Real(1, digits) + (core / Real(4, digits)).cbrt() +
            Real(1, digits) / (core * Real(2, digits)).cbrt();

  Real residual = ((Real(2, digits) * xi - Real(6, digits)) * xi + Real(3, digits)) * xi -
                  Real(2, digits);
  if (!(residual.abs() < Real::pow10(-(digits - 5), digits)))
    throw std::logic_error("closed form lost precision against the cubic");
  return xi;
}

std::pair<Real, Real> positivity_roots(int digits) {
  Real xi = xi_constant(digits);
  Real a_coeff = Real(2, digits) * xi * xi - Real(4, digits) * xi + Real(1, digits);
  Real b_coeff = Real(rat(-3, 2), digits) * xi * xi + Real(rat(7, 2), digits) * xi +
                 Real(rat(1, 2), digits);
  Real disc = (b_coeff * b_coeff + Real(4, digits) * a_coeff * xi).sqrt();
  Real two_a = Real(2, digits) * a_coeff;
  Real a1 = (-b_coeff - disc) / two_a;
  Real a2 = (-b_coeff + disc) / two_a;
  if (!(a1.sign() < 0 && a2.sign() > 0 && a2 < Real(1, digits)))
    throw std::logic_error("positivity roots left their expected interval");
  return {a1, a2};
}

FiberCountChoice beta_of(long d, long a, int digits) {
  if (a < 1) throw std::invalid_argument("ruling degree must be positive");
  if (d < 1 || d % a != 0)
    throw std::invalid_argument("the ruling degree must divide the monoid degree");
  long h = d / a;
  Real target = Real(h, digits) * xi_constant(digits);
  long beta = target.ceil_long();
  Real offset = Real(beta, digits) - target;
  if (!(offset.sign() > 0 && offset < Real(1, digits)))
    throw std::logic_error("rounding offset left the open unit interval");
  return {beta, offset};
}

BoundReport check_quadratic_inequality(long a, long b, long beta, long d) {
  if (a < 1 || b < 1) throw std::invalid_argument("degrees must be positive");
  if (beta < 1 || d < 1) throw std::invalid_argument("beta and d must be positive");
  Rational ra = rq(a), rb = rq(b), rbeta = rq(beta), rd = rq(d);
  Rational lhs = (ra * rb + rat(1, 2)) * rd * rd +
                 (rq(-4) * ra * ra * rb + rat(7, 2) * ra - rq(1)) * rbeta * rd +
                 ra * ra * (rq(2) * ra * rb - rat(3, 2)) * rbeta * rbeta;
  return {lhs, Rational(0), lhs, lhs > 0};
}

RealBoundReport check_cubic_remainder(long h, const Rational& eps_prime, long a,
                                      int digits) {
  if (h < 1) throw std::invalid_argument("h must be positive");
  if (a < 1) throw std::invalid_argument("ruling degree must be positive");
  if (!(eps_prime > 0 && eps_prime < 1))
    throw std::invalid_argument("the rounding offset must lie in (0, 1)");
  Real xi = xi_constant(digits);
  Real eps(eps_prime, digits);
  Real rh(h, digits);
  Real bracket = Real(3, digits) * rh * rh *
                     (Real(2, digits) * xi * xi - Real(4, digits) * xi + Real(1, digits)) +
                 Real(6, digits) * rh * eps * (xi - Real(1, digits)) +
                 Real(2, digits) * eps * eps;
  Real a3(a * a * a, digits);
  Real lhs = a3 * eps / Real(6, digits) * bracket;
  Real zero(digits);
  return {lhs, zero, lhs, lhs.sign() > 0};
}

BoundReport check_dimension_inequality(long a, long b, long beta, long d,
                                       const std::optional<Rational>& h0) {
  if (a < 2) throw std::invalid_argument("ruling degree must be at least two");
  if (b < 1 || beta < 1) throw std::invalid_argument("degrees must be positive");
  if (d < 2) throw std::invalid_argument("monoid degree must be at least two");
  Rational rd = rq(d);
  Rational delta = rq(a) * (rq(2) * rq(b) + rq(beta));
  Rational sections =
      h0 ? *h0 : delta / rq(2) * rd * rd - rq(a - 2) / rq(2) * rq(beta) * rd;
  // The complement of the cone-bearing subspace sits one projective
  // codimension below the difference of the two system dimensions.
  Rational lower = cone_complement_terms(delta, rd) - sections - rq(1);
  Rational lhs = lower + rq(2) * rd * rd + rq(2) * rd;
  Rational rhs = rd * rd * rd / rq(3) + rat(3, 2) * rd * rd + rat(13, 6) * rd;
  Rational margin = lhs - rhs;
  return {lhs, rhs, margin, margin > 0};
}

std::optional<long> dimension_threshold(long a, long b, long h_max, int digits) {
  if (h_max < 1) throw std::invalid_argument("the scan needs at least one value");
  long last_nonpositive = 0;
  for (long h = 1; h <= h_max; ++h) {
    long d = a * h;
    FiberCountChoice choice = beta_of(d, a, digits);
    BoundReport report = check_dimension_inequality(a, b, choice.beta, d);
    if (!report.verdict) last_nonpositive = h;
  }
  if (last_nonpositive == h_max) return std::nullopt;
  return last_nonpositive + 1;
}

LinearFit estimate_ell_m(const ParamSurface& Z, int d_lo, int d_hi, Rng& rng) {
  if (Z.ambient_dim() != 4)
    throw std::invalid_argument("the fit expects a re-embedded surface in P4");
  if (d_lo < 2 || d_hi - d_lo < 3)
    throw std::invalid_argument("the fit needs at least four consecutive degrees");

  long a = Z.ruling_degree();
  long sb = Z.section_degree();
  long delta = image_degree(Z, rng);
  if (delta % a != 0)
    throw std::invalid_argument("image degree is not a multiple of the ruling degree");
  long b = delta / a - sb;
  long beta = sb - b;
  if (b < 1 || beta < 0)
    throw std::invalid_argument("the surface is not a fibered re-embedding");

  std::vector<Rational> data;
  std::vector<long> degrees;
  for (int d = d_lo; d <= d_hi; ++d) {
    MonoidSystem sys = monoid_basis(d, {0});
    long rank;
    try {
      MonoidSystem restricted = restrict_to_surface(sys, Z);
      rank = restricted.h0_restricted;
    } catch (const std::domain_error&) {
      rank = static_cast<long>(sys.basis.size());  // nothing passes through Z
    }
    Rational rd = rq(d);
    Rational leading = rq(delta) / rq(2) * rd * rd - rq(a - 2) / rq(2) * rq(beta) * rd;
    data.push_back(rq(rank) - leading);
    degrees.push_back(d);
  }

  Rational n = rq(static_cast<long>(data.size()));
  Rational sum_d(0), sum_d2(0), sum_r(0), sum_dr(0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    Rational rd = rq(degrees[i]);
    sum_d += rd;
    sum_d2 += rd * rd;
    sum_r += data[i];
    sum_dr += rd * data[i];
  }
  Rational denom = n * sum_d2 - sum_d * sum_d;
  Rational ell = (n * sum_dr - sum_d * sum_r) / denom;
  Rational m = (sum_r - ell * sum_d) / n;

  std::vector<Rational> residuals;
  for (std::size_t i = 0; i < data.size(); ++i)
    residuals.push_back(data[i] - ell * rq(degrees[i]) - m);
  return {ell, m, std::move(residuals)};
}

WitnessReport non_equivalence_witness(long a, long deg_D, long deg_B) {
  if (a < 2) throw std::invalid_argument("ruling degree must be at least two");
  if (deg_D < 4) throw std::invalid_argument("the divisor degree must be at least four");
  if (deg_B < 1) throw std::invalid_argument("the scroll divisor degree must be positive");

  long proj_degree = 2 * a * deg_D;
  long scroll_degree = 2 * deg_B;
  Rational proj_ratio = rq(12) / rq(proj_degree);
  Rational scroll_ratio = rq(12) / rq(scroll_degree);
  bool scroll_terminal = scroll_ratio < 1;
  // With multiplicity at most three and the pair weight 4/degree, the
  // projection side always passes its test (its degree is at least sixteen);
  // the scroll side passes exactly when its degree exceeds twelve. When it
  // does, two terminal pairs of different degrees cannot be equivalent; when
  // it does not, its degree is at most twelve, which the projection degree
  // strictly dominates, and the same obstruction applies from the other side.
  std::string branch = scroll_terminal ? "terminal-pairs" : "degree-comparison";
  return {proj_degree, scroll_degree, proj_ratio, scroll_ratio,
          scroll_terminal, branch, false};
}

}  // namespace cremona
