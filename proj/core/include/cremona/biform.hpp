#pragma once

// Bihomogeneous forms on P1 x P1 in the pairs (s,t) and (u,v), stored as a
// dense (a+1) x (b+1) coefficient grid: entry (i,j) multiplies
// s^i t^{a-i} u^j v^{b-j}. Fibers of the ruling are the curves {(u:v) const};
// restricting to one gives a binary form of degree a in (s,t).

#include <optional>
#include <string>
#include <vector>

#include "cremona/binary_form.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/rational.hpp"

namespace cremona {

class BiForm {
 public:
  BiForm() : a_(0), b_(0), c_(1, Rational(0)) {}
  BiForm(int a, int b);  // zero form of the given bidegree

  static BiForm constant(const Rational& q);
  // s^i t^{a-i} u^j v^{b-j} with coefficient q.
  static BiForm term(int a, int b, int i, int j, const Rational& q);

  int deg_st() const { return a_; }
  int deg_uv() const { return b_; }
  bool is_zero() const;

  const Rational& at(int i, int j) const { return c_[idx(i, j)]; }
  void set(int i, int j, const Rational& q) { c_[idx(i, j)] = q; }

  BiForm operator+(const BiForm& o) const;
  BiForm operator-(const BiForm& o) const;
  BiForm operator*(const BiForm& o) const;
  BiForm operator-() const;
  BiForm scaled(const Rational& q) const;
  bool operator==(const BiForm& o) const;

  Rational eval(const Rational& s, const Rational& t, const Rational& u,
                const Rational& v) const;

  // Binary form of degree a in (s,t) on the fiber (u:v) = (u0:v0).
  BinaryForm restrict_fiber(const Rational& u0, const Rational& v0) const;
  // Binary form of degree b in (u,v) along (s:t) = (s0:t0).
  BinaryForm restrict_section(const Rational& s0, const Rational& t0) const;

  BiForm derivative_s() const;
  BiForm derivative_t() const;
  BiForm derivative_u() const;
  BiForm derivative_v() const;

  // Multiplicity of s, t, u, v as monomial factors.
  int mult_s() const;
  int mult_t() const;
  int mult_u() const;
  int mult_v() const;

  // Swap the two P1 factors.
  BiForm transposed() const;

  // Primitive integer coefficients, lex-first nonzero positive.
  BiForm normalized() const;

  // Exact quotient if divisor divides this form, nullopt otherwise.
  std::optional<BiForm> divide_exact(const BiForm& divisor) const;

  static BiForm gcd(const BiForm& f, const BiForm& g);
  BiForm squarefree_part() const;

  std::string to_string() const;
  static BiForm parse(const std::string& text);

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(b_ + 1) +
           static_cast<std::size_t>(j);
  }
  int a_, b_;
  std::vector<Rational> c_;
};

// Resultant of f and g with respect to (s,t): a binary form in (u,v) of
// degree deg_st(f)*deg_uv(g) + deg_st(g)*deg_uv(f), computed by exact
// interpolation of Sylvester determinants on fibers.
BinaryForm resultant_st(const BiForm& f, const BiForm& g);
// Same with the roles of the two P1 factors swapped; result is in (s,t).
BinaryForm resultant_uv(const BiForm& f, const BiForm& g);

// Restriction of a homogeneous polynomial in n+1 variables to a tuple of n+1
// BiForms of common bidegree (a,b); the result has bidegree (d*a, d*b).
BiForm substitute(const MultiPoly& f, const std::vector<BiForm>& phi);

}  // namespace cremona
