#pragma once

// Dense binary forms c_0 Y^n + ... + c_n X^n (stored as coefficient of
// X^i Y^{n-i} at index i). These carry all one-variable elimination work:
// gcd, squarefree parts, root counting over the algebraic closure, and
// Sylvester resultants.

#include <optional>
#include <string>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

class BinaryForm {
 public:
  BinaryForm() = default;
  // Coefficients of X^i Y^{degree-i}; trailing zeros meaningful.
  explicit BinaryForm(std::vector<Rational> coeffs);

  static BinaryForm zero() { return BinaryForm(); }

  bool is_zero() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm scaled(const Rational& q) const;
  bool operator==(const BinaryForm& o) const;

  Rational eval(const Rational& x, const Rational& y) const;
  BinaryForm derivative_x() const;
  BinaryForm derivative_y() const;

  // Largest k with X^k (resp. Y^k) dividing the form; 0 for the zero form.
  int x_multiplicity() const;
  int y_multiplicity() const;

  // Primitive integer coefficients, first nonzero positive. Zero stays zero.
  BinaryForm normalized() const;

  // Exact quotient if divisor divides this form, nullopt otherwise.
  std::optional<BinaryForm> divide_exact(const BinaryForm& divisor) const;

  static BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);
  BinaryForm squarefree_part() const;
  // Number of distinct roots in P^1 over the algebraic closure.
  int distinct_root_count() const;
  bool is_squarefree() const;

  static Rational resultant(const BinaryForm& f, const BinaryForm& g);

  std::string to_string(const std::string& xname, const std::string& yname) const;

 private:
  std::vector<Rational> c_;  // empty = zero form
};

}  // namespace cremona
