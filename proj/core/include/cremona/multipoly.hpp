#pragma once

// Sparse homogeneous polynomials in up to five variables x0..x4 over the
// rationals. Terms live in a map ordered by descending graded lex, so
// iteration starts at the leading monomial and every derived basis or pivot
// choice is deterministic.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

constexpr int kMaxVars = 5;

using Expo = std::array<std::uint8_t, kMaxVars>;

inline int expo_total(const Expo& e) {
  int t = 0;
  for (int i = 0; i < kMaxVars; ++i) t += e[i];
  return t;
}

// Descending graded lexicographic: higher total degree first, then
// lexicographically larger exponent vector first.
struct GrlexGreater {
  bool operator()(const Expo& a, const Expo& b) const {
    int ta = expo_total(a), tb = expo_total(b);
    if (ta != tb) return ta > tb;
    return a > b;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Expo, Rational, GrlexGreater>;

  MultiPoly() : nvars_(kMaxVars), degree_(0) {}
  explicit MultiPoly(int nvars) : nvars_(nvars), degree_(0) {}

  // Builds from raw terms; drops zero coefficients, checks homogeneity and
  // that no exponent uses a variable at index >= nvars.
  MultiPoly(int nvars, const TermMap& terms);

  static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
  static MultiPoly monomial(int nvars, const Expo& e, const Rational& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly constant(int nvars, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  int nvars() const { return nvars_; }
  // Total degree; 0 for the zero polynomial by convention.
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(const Expo& e) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const;

  // Multiplicity of the hypersurface {this = 0} at the i-th coordinate point:
  // d - (largest x_i power whose cofactor form is nonzero).
  int mult_at_coord_point(int i) const;

  // Cofactor of x_i^k in the x_i-graded decomposition; slot i of every
  // returned exponent is zero. Homogeneous of degree d-k when nonzero.
  MultiPoly graded_piece(int i, int k) const;
  // Largest x_i power appearing; -1 for the zero polynomial.
  int max_power(int i) const;

  Rational eval(const std::array<Rational, kMaxVars>& point) const;

  std::string to_string() const;
  static MultiPoly parse(const std::string& text, int nvars);

 private:
  int nvars_;
  int degree_;
  TermMap terms_;
};

}  // namespace cremona
