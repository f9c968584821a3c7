#include "cremona/bounds.hpp"

#include <stdexcept>

#include "cremona/lambda.hpp"
#include "cremona/monoid.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

Rational cubic_at(const Rational& x) {
  return rat(2) * x * x * x - rat(6) * x * x + rat(3) * x - rat(2);
}

}  // namespace

TEST_CASE("the growth constant satisfies its cubic") {
  Real xi = xi_constant(50);
  CHECK(xi > Real(rat(25674683, 10000000), 50));
  CHECK(xi < Real(rat(25674684, 10000000), 50));

  // Construction already checks the residual; re-check against a coarser
  // tolerance through an independent evaluation.
  Real residual = ((Real(2, 50) * xi - Real(6, 50)) * xi + Real(3, 50)) * xi - Real(2, 50);
  CHECK(residual.abs() < Real::pow10(-40, 50));

  // The root is unique: exactly one sign change of the cubic on a rational
  // grid spanning it.
  int changes = 0;
  int prev = cubic_at(Rational(0)) > 0 ? 1 : -1;
  for (long k = 1; k <= 40; ++k) {
    Rational v = cubic_at(rat(k, 8));
    if (v == 0) continue;
    int sign = v > 0 ? 1 : -1;
    if (sign != prev) ++changes;
    prev = sign;
  }
  CHECK(changes == 1);

  CHECK_THROWS_AS(xi_constant(29), std::invalid_argument);
}

TEST_CASE("the positivity roots bracket every integer ruling degree") {
  auto [a1, a2] = positivity_roots(50);
  CHECK(a1.sign() < 0);
  CHECK(a2 > Real(rat(8628701082, 10000000000), 50));
  CHECK(a2 < Real(rat(8628701083, 10000000000), 50));

  // Direct sign check of the quadratic at the integers the bound serves.
  Real xi = xi_constant(50);
  Real A = Real(2, 50) * xi * xi - Real(4, 50) * xi + Real(1, 50);
  Real B = Real(rat(-3, 2), 50) * xi * xi + Real(rat(7, 2), 50) * xi + Real(rat(1, 2), 50);
  for (long a = 1; a <= 50; ++a) {
    Real ra(a, 50);
    CHECK((A * ra * ra + B * ra - xi).sign() > 0);
  }
}

TEST_CASE("the fiber count schedule rounds up the growth constant") {
  FiberCountChoice one = beta_of(2, 2);
  CHECK(one.beta == 3);
  CHECK(one.offset > Real(rat(4325, 10000), 50));
  CHECK(one.offset < Real(rat(4326, 10000), 50));

  FiberCountChoice ten = beta_of(20, 2);
  CHECK(ten.beta == 26);
  CHECK(ten.offset > Real(rat(3253, 10000), 50));
  CHECK(ten.offset < Real(rat(3254, 10000), 50));

  // Only h = d / a matters.
  CHECK(beta_of(12, 3).beta == beta_of(4, 1).beta);

  CHECK_THROWS_AS(beta_of(7, 2), std::invalid_argument);
  CHECK_THROWS_AS(beta_of(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(beta_of(4, 0), std::invalid_argument);
}

TEST_CASE("the quadratic remainder is positive along the schedule") {
  BoundReport r1 = check_quadratic_inequality(1, 1, beta_of(100, 1).beta, 100);
  CHECK(r1.verdict);
  CHECK(r1.margin == r1.lhs);

  BoundReport r2 = check_quadratic_inequality(2, 1, beta_of(50, 2).beta, 50);
  CHECK(r2.verdict);

  CHECK_THROWS_AS(check_quadratic_inequality(0, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_quadratic_inequality(1, 1, 0, 2), std::invalid_argument);
}

TEST_CASE("the cubic remainder is positive inside the unit interval") {
  for (long h : {1L, 10L, 100L}) {
    for (long num : {1L, 50L, 99L}) {
      RealBoundReport r = check_cubic_remainder(h, rat(num, 100), 2);
      CHECK(r.verdict);
      CHECK(r.margin.sign() > 0);
    }
  }

  RealBoundReport spot = check_cubic_remainder(1, rat(1, 2), 2);
  CHECK(spot.lhs > Real(11, 50));
  CHECK(spot.lhs < Real(12, 50));

  CHECK_THROWS_AS(check_cubic_remainder(0, rat(1, 2), 2), std::invalid_argument);
  CHECK_THROWS_AS(check_cubic_remainder(1, Rational(0), 2), std::invalid_argument);
  CHECK_THROWS_AS(check_cubic_remainder(1, Rational(1), 2), std::invalid_argument);
}

TEST_CASE("the assembled inequality flips sign between schedules") {
  // A fixed fiber count falls behind the monoid degree.
  BoundReport behind = check_dimension_inequality(2, 1, 1, 4);
  CHECK(!behind.verdict);
  CHECK(behind.margin < 0);

  // The rounded schedule keeps the margin positive.
  for (long h = 1; h <= 12; ++h) {
    long d = 2 * h;
    BoundReport r = check_dimension_inequality(2, 1, beta_of(d, 2).beta, d);
    CHECK(r.verdict);
  }

  CHECK_THROWS_AS(check_dimension_inequality(1, 1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(check_dimension_inequality(2, 0, 1, 4), std::invalid_argument);
}

TEST_CASE("the schedule threshold is finite across the small grid") {
  for (long a = 2; a <= 4; ++a)
    for (long b = 1; b <= 3; ++b) {
      auto h = dimension_threshold(a, b, 64);
      REQUIRE(h.has_value());
      CHECK(*h == 1);
    }
}

TEST_CASE("the lower bound never exceeds the exact cone-free dimension") {
  ParamSurface quartic = make_surface({BiForm::parse("s^2*u"), BiForm::parse("s^2*v"),
                                       BiForm::parse("s*t*u + t^2*v"),
                                       BiForm::parse("t^2*u")});
  Rng lrng(11);
  LambdaRealization lam = build_lambda_M(quartic, 1, lrng);

  // First degree past the image degree, where the cone bound applies.
  const int d = 7;
  MonoidSystem sys = monoid_basis(d, {0});
  MonoidSystem restricted = restrict_to_surface(sys, lam.result);
  int actual;
  try {
    actual = not_cone_complement(restricted, 0).dim();
  } catch (const std::domain_error&) {
    actual = -1;
  }

  BoundReport rep =
      check_dimension_inequality(2, 1, 1, d, Rational(restricted.h0_restricted));
  Rational lower = rep.lhs - (rat(2) * d * d + rat(2) * d);
  CHECK(lower <= Rational(actual));
}

TEST_CASE("the correction fit is exact on a scroll") {
  ParamSurface scroll = make_surface({BiForm::parse("s*u"), BiForm::parse("s*v"),
                                      BiForm::parse("t*u"), BiForm::parse("t*v"),
                                      BiForm::parse("s*u + t*v")});
  Rng rng(5);
  LinearFit fit = estimate_ell_m(scroll, 2, 6, rng);
  CHECK(fit.ell == rat(2));
  CHECK(fit.m == rat(1));
  for (const Rational& r : fit.residuals) CHECK(r == 0);

  // Same seed, same fit.
  Rng again(5);
  LinearFit refit = estimate_ell_m(scroll, 2, 6, again);
  CHECK(refit.ell == fit.ell);
  CHECK(refit.m == fit.m);

  Rng bad(5);
  CHECK_THROWS_AS(estimate_ell_m(scroll, 2, 4, bad), std::invalid_argument);
  ParamSurface in_p3 = make_surface(
      {BiForm::parse("s*u"), BiForm::parse("s*v"), BiForm::parse("t*u"), BiForm::parse("t*v")});
  CHECK_THROWS_AS(estimate_ell_m(in_p3, 2, 6, bad), std::invalid_argument);
}

TEST_CASE("the terminal pair arithmetic separates the two projections") {
  WitnessReport w = non_equivalence_witness(2, 4, 7);
  CHECK(w.projection_degree == 16);
  CHECK(w.scroll_degree == 14);
  CHECK(w.projection_ratio == rat(3, 4));
  CHECK(w.scroll_ratio == rat(6, 7));
  CHECK(w.scroll_pair_terminal);
  CHECK(w.branch == "terminal-pairs");
  CHECK(!w.cremona_equivalent);

  WitnessReport low = non_equivalence_witness(2, 4, 6);
  CHECK(low.scroll_degree == 12);
  CHECK(!low.scroll_pair_terminal);
  CHECK(low.branch == "degree-comparison");
  CHECK(!low.cremona_equivalent);

  CHECK_THROWS_AS(non_equivalence_witness(1, 4, 7), std::invalid_argument);
  CHECK_THROWS_AS(non_equivalence_witness(2, 3, 7), std::invalid_argument);
  CHECK_THROWS_AS(non_equivalence_witness(2, 4, 0), std::invalid_argument);
}
