#pragma once

// Deterministic splitmix64 stream with named substreams. Every randomized
// routine takes an Rng (or a seed) and derives child streams by tag, so
// retries and parallel draws stay reproducible independent of call order.

#include <cstdint>
#include <string>

#include "cremona/rational.hpp"

namespace cremona {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Child stream addressed by tag; does not advance this stream.
  Rng fork(const std::string& tag) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : tag) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    Rng child(state_ ^ h);
    child.next();
    return child;
  }

  Rng fork(const std::string& tag, std::uint64_t index) const {
    return fork(tag + "#" + std::to_string(index));
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  long integer_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Random rational of height at most h, possibly zero.
  Rational rational(long h) {
    long num = integer_in(-h, h);
    long den = integer_in(1, h);
    return rat(num, den);
  }

  Rational nonzero_rational(long h) {
    for (;;) {
      Rational q = rational(h);
      if (q != 0) return q;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace cremona
