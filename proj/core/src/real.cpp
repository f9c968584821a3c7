#include "cremona/real.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cremona {

namespace {

mpfr_prec_t bits_for(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

}  // namespace

Real::Real(int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    digits_ = other.digits_;
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

int Real::sign() const { return mpfr_sgn(v_); }

Real Real::operator+(const Real& o) const {
  Real r(std::max(digits_, o.digits_));
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-(const Real& o) const {
  Real r(std::max(digits_, o.digits_));
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator*(const Real& o) const {
  Real r(std::max(digits_, o.digits_));
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator/(const Real& o) const {
  if (mpfr_zero_p(o.v_)) throw std::domain_error("division by zero");
  Real r(std::max(digits_, o.digits_));
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(digits_);
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt() const {
  if (sign() < 0) throw std::domain_error("square root of a negative value");
  Real r(digits_);
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::cbrt() const {
  Real r(digits_);
  mpfr_cbrt(r.v_, v_, MPFR_RNDN);
  return r;
}

bool Real::operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }

long Real::ceil_long() const {
  Real r(digits_);
  mpfr_ceil(r.v_, v_);
  if (!mpfr_fits_slong_p(r.v_, MPFR_RNDN))
    throw std::overflow_error("value too large for a machine integer");
  return mpfr_get_si(r.v_, MPFR_RNDN);
}

Real Real::pow10(int exponent, int digits) {
  Real r(digits);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, exponent, MPFR_RNDN);
  return r;
}

std::string Real::str(int decimals) const {
  if (decimals < 0) throw std::invalid_argument("negative decimal count");
  int needed = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, v_);
  std::vector<char> buf(static_cast<std::size_t>(needed) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, v_);
  return std::string(buf.data());
}

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

}  // namespace cremona
