#pragma once

// Dense exact linear algebra over Q. Elimination is fraction-free
// (Bareiss) on row-scaled integer matrices; a modular rank over the Mersenne
// prime 2^61-1 serves as a fast certificate that a kernel is empty (the
// modular rank never exceeds the rational rank).

#include <cstdint>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

class QMat {
 public:
  QMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols, Rational(0))) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r][c]; }

  std::size_t rank() const;
  // Rank of the reduction mod 2^61-1; a lower bound for rank().
  std::size_t rank_mod() const;
  // Exact null space basis in reduced row echelon convention: one vector per
  // free column, entry 1 at its free column before integer normalization;
  // vectors are scaled to primitive integer entries.
  std::vector<std::vector<Rational>> kernel() const;
  // Determinant; matrix must be square.
  Rational det() const;

  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Rational>> a_;
};

}  // namespace cremona
