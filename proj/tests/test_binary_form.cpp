#include <doctest.h>

#include "cremona/binary_form.hpp"
#include "cremona/rng.hpp"

using namespace cremona;

namespace {

BinaryForm bf(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return BinaryForm(std::move(c));
}

// (x - r*y) as a binary form.
BinaryForm root_factor(const Rational& r) {
  return BinaryForm({-r, Rational(1)});
}

BinaryForm random_form(Rng& rng, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(rng.rational(10));
  BinaryForm f{c};
  if (f.is_zero()) c.back() = Rational(1);
  return BinaryForm(std::move(c));
}

}  // namespace

TEST_CASE("gcd of forms with known common factors") {
  BinaryForm p = root_factor(rat(2)) * root_factor(rat(-1, 3)) * root_factor(rat(5));
  BinaryForm q = root_factor(rat(2)) * root_factor(rat(-1, 3)) * root_factor(rat(7));
  BinaryForm g = BinaryForm::gcd(p, q);
  BinaryForm expect = (root_factor(rat(2)) * root_factor(rat(-1, 3))).normalized();
  CHECK(g == expect);

  CHECK(BinaryForm::gcd(p, bf({0, 0, 0, 0})) == p.normalized());
}

TEST_CASE("gcd catches factors supported at 0 and infinity") {
  // x^2*y*(x-y) and x*y^2*(x-y)
  BinaryForm f = bf({0, 0, -1, 1, 0});
  BinaryForm g = bf({0, -1, 1, 0, 0});
  BinaryForm d = BinaryForm::gcd(f, g);
  BinaryForm expect = bf({0, -1, 1, 0}).normalized();  // x*y*(x-y)
  CHECK(d == expect);
}

TEST_CASE("squarefree part and distinct root counting") {
  BinaryForm f = root_factor(rat(1)) * root_factor(rat(1)) * root_factor(rat(2));
  CHECK(f.distinct_root_count() == 2);
  CHECK_FALSE(f.is_squarefree());
  CHECK(f.squarefree_part() == (root_factor(rat(1)) * root_factor(rat(2))).normalized());

  // x^3 * y * (x - y): roots at 0, infinity, 1.
  BinaryForm g = bf({0, 0, 0, -1, 1, 0});
  CHECK(g.distinct_root_count() == 3);

  // Irreducible over Q with two conjugate roots: x^2 - 2y^2.
  BinaryForm h = bf({-2, 0, 1});
  CHECK(h.distinct_root_count() == 2);
  CHECK(h.is_squarefree());
}

TEST_CASE("resultant vanishes exactly on shared roots") {
  BinaryForm f = root_factor(rat(3)) * root_factor(rat(1, 2));
  BinaryForm g = root_factor(rat(3)) * root_factor(rat(4));
  CHECK(BinaryForm::resultant(f, g) == 0);

  BinaryForm h = root_factor(rat(5)) * root_factor(rat(4));
  CHECK(BinaryForm::resultant(f, h) != 0);
}

TEST_CASE("resultant is multiplicative") {
  Rng rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    Rng r = rng.fork("res", static_cast<std::uint64_t>(trial));
    BinaryForm f = random_form(r, 2);
    BinaryForm g = random_form(r, 3);
    BinaryForm h = random_form(r, 2);
    CHECK(BinaryForm::resultant(f * g, h) ==
          BinaryForm::resultant(f, h) * BinaryForm::resultant(g, h));
  }
}

TEST_CASE("resultant matches the product-of-evaluations formula") {
  // Res(f, g) = lc(f)^deg g * prod f-roots r of g(r) for split f.
  BinaryForm f = root_factor(rat(1)).scaled(rat(3)) * root_factor(rat(-2));
  BinaryForm g = bf({1, 1, 1});  // x^2 + xy + y^2
  Rational expect = pow_rational(rat(3), 2) * g.eval(rat(1), rat(1)) * g.eval(rat(-2), rat(1));
  CHECK(BinaryForm::resultant(f, g) == expect);
}

TEST_CASE("exact division") {
  BinaryForm f = root_factor(rat(2)) * root_factor(rat(-5)) * root_factor(rat(1, 7));
  BinaryForm d = root_factor(rat(-5));
  auto q = f.divide_exact(d);
  REQUIRE(q.has_value());
  CHECK(*q * d == f);
  CHECK_FALSE(f.divide_exact(root_factor(rat(9))).has_value());

  // Divisor supported at zero.
  BinaryForm xy = bf({0, 1, 0});  // x*y
  auto q2 = (f * xy).divide_exact(xy);
  REQUIRE(q2.has_value());
  CHECK(*q2 == f);
}

TEST_CASE("derivatives satisfy the Euler relation") {
  Rng rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    Rng r = rng.fork("euler", static_cast<std::uint64_t>(trial));
    BinaryForm f = random_form(r, 4);
    Rational x = r.rational(9), y = r.rational(9);
    Rational lhs = x * f.derivative_x().eval(x, y) + y * f.derivative_y().eval(x, y);
    CHECK(lhs == f.eval(x, y) * Rational(4));
  }
}

TEST_CASE("normalization produces primitive integer coefficients") {
  BinaryForm f = bf({6, -9, 3}).scaled(rat(1, 5));
  BinaryForm n = f.normalized();
  CHECK(n == bf({2, -3, 1}));
  CHECK(bf({-2, 4}).normalized() == bf({1, -2}));
}

TEST_CASE("printing binary forms") {
  CHECK(bf({-1, 0, 1}).to_string("s", "t") == "s^2 - t^2");
  CHECK(bf({0, 1}).to_string("u", "v") == "u");
  CHECK(bf({0, 0}).to_string("u", "v") == "0");
}
