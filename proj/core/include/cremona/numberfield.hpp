#pragma once

// Exact arithmetic in K = Q[w]/(q) for a squarefree modulus q. K is a
// product of fields; inverting a zero divisor is impossible, but the
// attempt reveals a proper factor of q. We surface that as ModulusSplit
// and let the caller redo the computation once per factor (dynamic
// evaluation). All routines below either finish with field semantics
// valid for every root of the current modulus or throw a split.

#include <cremona/rational.hpp>

#include <vector>

namespace cremona {

struct ModulusSplit {
  std::vector<Rational> factor;  // proper monic factor of the working modulus
};

class NumberField {
 public:
  // Coefficients of 1, w, w^2, ...; always reduced mod the modulus and
  // trimmed, so the canonical zero is the empty vector.
  using Elem = std::vector<Rational>;

  explicit NumberField(std::vector<Rational> modulus);

  int degree() const { return static_cast<int>(q_.size()) - 1; }
  const std::vector<Rational>& modulus() const { return q_; }

  Elem reduce(std::vector<Rational> p) const;
  Elem from_rational(const Rational& x) const;
  static bool is_zero(const Elem& a) { return a.empty(); }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(Elem a) const;
  // Inverse of a nonzero element; throws ModulusSplit on a zero divisor.
  Elem inv(const Elem& a) const;

 private:
  std::vector<Rational> q_;  // monic, degree >= 1
};

// Dense polynomials over K, lowest degree first; zero coefficients are
// empty Elems. Doubles as the coefficient list of a homogeneous binary
// form (entry i against u^i v^(n-i)) via KBinary below.
using KPoly = std::vector<NumberField::Elem>;

void kp_trim(KPoly& p);
int kp_deg(const KPoly& p);
bool kp_is_zero(const KPoly& p);
KPoly kp_mul(const NumberField& K, const KPoly& a, const KPoly& b);
KPoly kp_rem(const NumberField& K, KPoly a, const KPoly& b);
KPoly kp_monic(const NumberField& K, KPoly p);
KPoly kp_gcd(const NumberField& K, KPoly a, KPoly b);
KPoly kp_deriv(const NumberField& K, const KPoly& p);
bool kp_divides(const NumberField& K, const KPoly& d, const KPoly& a);

// Homogeneous binary form of exact degree c.size() - 1 over K. Unlike
// KPoly, leading zero coefficients are meaningful (powers of v).
struct KBinary {
  KPoly c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

bool kb_is_zero(const KBinary& f);
// Multiplicity of u (resp. v) as a factor. When the boundary coefficient
// is a zero divisor the answer differs between branches, so these split.
int kb_u_mult(const NumberField& K, const KBinary& f);
int kb_v_mult(const NumberField& K, const KBinary& f);
KBinary kb_gcd(const NumberField& K, const KBinary& f, const KBinary& g);
KBinary kb_squarefree(const NumberField& K, const KBinary& f);
bool kb_divides(const NumberField& K, const KBinary& d, const KBinary& f);

}  // namespace cremona
