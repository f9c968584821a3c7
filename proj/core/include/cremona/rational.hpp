#pragma once

// Exact rational scalars. mpq_class already maintains the canonical form we
// require (lowest terms, positive denominator, 0/1 for zero), so the toolkit
// uses it directly and adds only the small helpers the rest of the code needs.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cremona {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "3", "-7/2", "+5". Throws on malformed input or zero denominator.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  if (body.empty()) throw std::invalid_argument("empty rational literal");
  for (size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw std::invalid_argument("malformed rational literal: " + text);
  }
  try {
    Rational q(body);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

inline std::string to_string(const Rational& q) {
  return q.get_str();
}

// Height of n/d in lowest terms: max(|n|, d). Used to keep random choices and
// printed fixtures small.
inline Integer height(const Rational& q) {
  Integer n = abs(q.get_num());
  Integer d = q.get_den();
  return n > d ? n : d;
}

inline Rational pow_rational(const Rational& q, unsigned e) {
  Rational r(1);
  Rational base = q;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

}  // namespace cremona
