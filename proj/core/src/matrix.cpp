#include "cremona/matrix.hpp"

#include <stdexcept>

namespace cremona {

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % kPrime);
}

std::uint64_t powmod(std::uint64_t x, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1u) r = mulmod(r, x);
    x = mulmod(x, x);
    e >>= 1u;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t x) { return powmod(x, kPrime - 2); }

std::uint64_t reduce(const Integer& z) {
  Integer m = z % Integer(static_cast<unsigned long>(kPrime));
  if (m < 0) m += Integer(static_cast<unsigned long>(kPrime));
  return m.get_ui();
}

// Scales each row to integers; returns the integer matrix.
std::vector<std::vector<Integer>> integerize(const std::vector<std::vector<Rational>>& a) {
  std::vector<std::vector<Integer>> m;
  m.reserve(a.size());
  for (const auto& row : a) {
    Integer den(1);
    for (const auto& v : row)
      if (v != 0) den = lcm(den, v.get_den());
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& v : row) out.emplace_back(v.get_num() * (den / v.get_den()));
    m.push_back(std::move(out));
  }
  return m;
}

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // echelon rows, Bareiss-scaled
  std::vector<std::size_t> pivot_cols;     // ascending
};

// Fraction-free row echelon form. Deterministic: pivots chosen as the first
// row with a nonzero entry in the current column.
Echelon bareiss(std::vector<std::vector<Integer>> m, std::size_t cols) {
  Echelon e;
  std::size_t rank = 0;
  Integer prev(1);
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    const auto& prow = m[rank];
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      Integer head = m[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        Integer t = m[r][c] * prow[col] - head * prow[c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[r][c] = t;
      }
      m[r][col] = 0;
    }
    prev = prow[col];
    e.pivot_cols.push_back(col);
    ++rank;
  }
  e.rows.assign(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(rank));
  return e;
}

std::vector<Rational> primitive(std::vector<Rational> v) {
  Integer den(1);
  for (const auto& x : v)
    if (x != 0) den = lcm(den, x.get_den());
  Integer num(0);
  for (const auto& x : v)
    if (x != 0) num = gcd(num, Integer(x.get_num() * (den / x.get_den())));
  if (num == 0) return v;
  Rational scale(den, num);
  scale.canonicalize();
  for (auto& x : v) x *= scale;
  return v;
}

}  // namespace

std::size_t QMat::rank() const {
  return bareiss(integerize(a_), cols_).pivot_cols.size();
}

std::size_t QMat::rank_mod() const {
  auto ints = integerize(a_);
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(ints.size());
  for (const auto& row : ints) {
    std::vector<std::uint64_t> out;
    out.reserve(row.size());
    for (const auto& z : row) out.push_back(reduce(z));
    m.push_back(std::move(out));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    std::uint64_t inv = invmod(m[rank][col]);
    for (std::size_t c = col; c < cols_; ++c) m[rank][c] = mulmod(m[rank][c], inv);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      std::uint64_t f = m[r][col];
      if (!f) continue;
      for (std::size_t c = col; c < cols_; ++c) {
        std::uint64_t sub = mulmod(f, m[rank][c]);
        m[r][c] = (m[r][c] + kPrime - sub) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> QMat::kernel() const {
  Echelon e = bareiss(integerize(a_), cols_);
  std::size_t rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[f] = 1;
    // Back-substitute through the echelon rows.
    for (std::size_t i = rank; i-- > 0;) {
      std::size_t pc = e.pivot_cols[i];
      if (f < pc) continue;
      Rational acc(0);
      for (std::size_t c = pc + 1; c < cols_; ++c) {
        if (v[c] == 0 || e.rows[i][c] == 0) continue;
        acc += Rational(e.rows[i][c]) * v[c];
      }
      v[pc] = -acc / Rational(e.rows[i][pc]);
    }
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

Rational QMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  if (rows_ == 0) return Rational(1);
  // Track the row scalings, then run Bareiss; the final pivot is the
  // determinant of the scaled matrix.
  Rational scale(1);
  std::vector<std::vector<Integer>> m;
  m.reserve(rows_);
  for (const auto& row : a_) {
    Integer den(1);
    for (const auto& v : row)
      if (v != 0) den = lcm(den, v.get_den());
    scale *= Rational(Integer(1), den);
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& v : row) out.emplace_back(v.get_num() * (den / v.get_den()));
    m.push_back(std::move(out));
  }
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < rows_; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < rows_ && m[piv][k] == 0) ++piv;
      if (piv == rows_) return Rational(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows_; ++i) {
      for (std::size_t j = k + 1; j < rows_; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Rational d(m[rows_ - 1][rows_ - 1]);
  if (sign < 0) d = -d;
  return d * scale;
}

std::vector<Rational> QMat::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
  std::vector<Rational> y(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (a_[r][c] != 0 && x[c] != 0) y[r] += a_[r][c] * x[c];
  return y;
}

}  // namespace cremona
