#pragma once

// Correctly rounded arbitrary-precision reals (MPFR backed), sized by a
// decimal digit count. Used where the growth constant of the fiber-count
// schedule enters a bound and exact rational arithmetic is unavailable.

#include <mpfr.h>

#include <string>

#include "cremona/rational.hpp"

namespace cremona {

class Real {
 public:
  explicit Real(int digits);  // zero
  Real(long value, int digits);
  Real(const Rational& value, int digits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  int digits() const { return digits_; }
  int sign() const;

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;  // throws on division by zero
  Real operator-() const;
  Real abs() const;
  Real sqrt() const;  // throws std::domain_error on negative input
  Real cbrt() const;

  bool operator<(const Real& o) const;
  bool operator>(const Real& o) const { return o < *this; }
  bool operator<=(const Real& o) const { return !(o < *this); }
  bool operator>=(const Real& o) const { return !(*this < o); }

  long ceil_long() const;

  static Real pow10(int exponent, int digits);

  std::string str(int decimals) const;  // fixed-point rendering
  double to_double() const;

 private:
  mpfr_t v_;
  int digits_;
};

}  // namespace cremona
