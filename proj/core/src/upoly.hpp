#pragma once

// Dense univariate polynomials over Q, lowest degree first. Internal helper
// layer shared by the dehomogenized gcd/resultant routines and the number
// field arithmetic; not part of the installed API.

#include <cremona/rational.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace cremona::upoly {

using UPoly = std::vector<Rational>;

inline void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline UPoly uadd(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  utrim(a);
  return a;
}

inline UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  utrim(a);
  return a;
}

inline UPoly uscale(UPoly a, const Rational& q) {
  for (auto& c : a) c *= q;
  if (q == 0) a.clear();
  return a;
}

inline UPoly uderiv(const UPoly& p) {
  UPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(static_cast<long>(i)));
  utrim(r);
  return r;
}

inline Rational ueval(const UPoly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

inline UPoly urem(UPoly a, const UPoly& b) {
  utrim(a);
  while (!a.empty() && udeg(a) >= udeg(b)) {
    Rational q = a.back() / b.back();
    int shift = udeg(a) - udeg(b);
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + static_cast<std::size_t>(shift)] -= q * b[i];
    a.pop_back();
    utrim(a);
  }
  return a;
}

inline UPoly umonic(UPoly p) {
  utrim(p);
  if (p.empty()) return p;
  Rational lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

inline UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = urem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(a);
}

inline UPoly udiv_exact(UPoly a, const UPoly& b) {
  utrim(a);
  if (b.empty()) throw std::invalid_argument("division by zero polynomial");
  if (a.empty()) return {};
  if (udeg(a) < udeg(b)) throw std::invalid_argument("inexact polynomial division");
  UPoly q(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && udeg(a) >= udeg(b)) {
    Rational f = a.back() / b.back();
    int shift = udeg(a) - udeg(b);
    q[static_cast<std::size_t>(shift)] = f;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + static_cast<std::size_t>(shift)] -= f * b[i];
    a.pop_back();
    utrim(a);
  }
  if (!a.empty()) throw std::invalid_argument("inexact polynomial division");
  return q;
}

// Half-extended Euclid: returns (g, s) with g = gcd(a, b) monic and
// s*a = g modulo b. Enough for inversion in Q[w]/(b).
inline std::pair<UPoly, UPoly> uhalf_eea(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  UPoly s0{Rational(1)}, s1{};
  UPoly r0 = std::move(a), r1 = std::move(b);
  while (!r1.empty()) {
    // Quotient of r0 by r1.
    UPoly q;
    UPoly rem = r0;
    utrim(rem);
    if (udeg(rem) >= udeg(r1)) {
      q.assign(rem.size() - r1.size() + 1, Rational(0));
      while (!rem.empty() && udeg(rem) >= udeg(r1)) {
        Rational f = rem.back() / r1.back();
        int shift = udeg(rem) - udeg(r1);
        q[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < r1.size(); ++i)
          rem[i + static_cast<std::size_t>(shift)] -= f * r1[i];
        rem.pop_back();
        utrim(rem);
      }
    }
    UPoly s2 = usub(std::move(s0), umul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.empty()) return {r0, s0};
  Rational lc = r0.back();
  for (auto& c : r0) c /= lc;
  for (auto& c : s0) c /= lc;
  return {r0, s0};
}

}  // namespace cremona::upoly
