#include "cremona/binary_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "upoly.hpp"

namespace cremona {

using upoly::UPoly;
using upoly::udeg;
using upoly::uderiv;
using upoly::udiv_exact;
using upoly::ugcd;

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
}

bool BinaryForm::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (degree() != o.degree()) throw std::invalid_argument("degree mismatch in sum");
  std::vector<Rational> r = c_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
  return *this + o.scaled(Rational(-1));
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
  }
  return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::scaled(const Rational& q) const {
  std::vector<Rational> r = c_;
  for (auto& v : r) v *= q;
  return BinaryForm(std::move(r));
}

bool BinaryForm::operator==(const BinaryForm& o) const { return c_ == o.c_; }

Rational BinaryForm::eval(const Rational& x, const Rational& y) const {
  Rational acc(0);
  int n = degree();
  for (int i = 0; i <= n; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    acc += c_[static_cast<std::size_t>(i)] * pow_rational(x, static_cast<unsigned>(i)) *
           pow_rational(y, static_cast<unsigned>(n - i));
  }
  return acc;
}

BinaryForm BinaryForm::derivative_x() const {
  if (degree() == 0) return BinaryForm({Rational(0)});
  std::vector<Rational> r(c_.size() - 1, Rational(0));
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::derivative_y() const {
  if (degree() == 0) return BinaryForm({Rational(0)});
  int n = degree();
  std::vector<Rational> r(c_.size() - 1, Rational(0));
  for (int i = 0; i < n; ++i)
    r[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * Rational(n - i);
  return BinaryForm(std::move(r));
}

int BinaryForm::x_multiplicity() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

int BinaryForm::y_multiplicity() const {
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != 0) return degree() - static_cast<int>(i);
  return 0;
}

BinaryForm BinaryForm::normalized() const {
  if (is_zero()) return *this;
  Integer den(1);
  for (const auto& v : c_)
    if (v != 0) den = lcm(den, v.get_den());
  Integer num(0);
  for (const auto& v : c_)
    if (v != 0) num = ::gcd(num, Integer(v.get_num() * den / v.get_den()));
  Rational scale(den, num);
  scale.canonicalize();
  BinaryForm r = scaled(scale);
  for (const auto& v : r.c_) {
    if (v != 0) {
      if (v < 0) r = r.scaled(Rational(-1));
      break;
    }
  }
  return r;
}

std::optional<BinaryForm> BinaryForm::divide_exact(const BinaryForm& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return std::nullopt;
  int nq = degree() - divisor.degree();
  if (nq < 0) return std::nullopt;
  // Solve the convolution triangularly from the divisor's lowest nonzero index.
  int p = divisor.x_multiplicity();
  std::vector<Rational> q(static_cast<std::size_t>(nq) + 1, Rational(0));
  for (int i = 0; i <= nq; ++i) {
    Rational acc = c_[static_cast<std::size_t>(i + p)];
    for (int k = 0; k < i; ++k) {
      int j = i + p - k;
      if (j >= 0 && j <= divisor.degree())
        acc -= q[static_cast<std::size_t>(k)] * divisor.c_[static_cast<std::size_t>(j)];
    }
    q[static_cast<std::size_t>(i)] = acc / divisor.c_[static_cast<std::size_t>(p)];
  }
  BinaryForm quot(std::move(q));
  if (quot * divisor == *this) return quot;
  return std::nullopt;
}

BinaryForm BinaryForm::gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  int kx = std::min(f.x_multiplicity(), g.x_multiplicity());
  int ky = std::min(f.y_multiplicity(), g.y_multiplicity());
  // Dehomogenize in z = X/Y after stripping monomial content.
  UPoly pf(f.c_.begin() + f.x_multiplicity(), f.c_.end() - f.y_multiplicity());
  UPoly pg(g.c_.begin() + g.x_multiplicity(), g.c_.end() - g.y_multiplicity());
  UPoly h = ugcd(pf, pg);
  std::vector<Rational> r(static_cast<std::size_t>(kx + ky + udeg(h)) + 1, Rational(0));
  for (std::size_t i = 0; i < h.size(); ++i) r[static_cast<std::size_t>(kx) + i] = h[i];
  return BinaryForm(std::move(r)).normalized();
}

BinaryForm BinaryForm::squarefree_part() const {
  if (is_zero()) return *this;
  int kx = x_multiplicity();
  int ky = y_multiplicity();
  UPoly p(c_.begin() + kx, c_.end() - ky);
  UPoly g = ugcd(p, uderiv(p));
  UPoly core = g.empty() || udeg(g) == 0 ? p : udiv_exact(p, g);
  int extra_x = kx > 0 ? 1 : 0;
  int extra_y = ky > 0 ? 1 : 0;
  std::vector<Rational> r(
      static_cast<std::size_t>(extra_x + extra_y + udeg(core)) + 1, Rational(0));
  for (std::size_t i = 0; i < core.size(); ++i) r[static_cast<std::size_t>(extra_x) + i] = core[i];
  return BinaryForm(std::move(r)).normalized();
}

int BinaryForm::distinct_root_count() const {
  if (is_zero()) throw std::invalid_argument("root count of the zero form");
  return squarefree_part().degree();
}

bool BinaryForm::is_squarefree() const {
  if (is_zero()) return false;
  return squarefree_part().degree() == degree();
}

Rational BinaryForm::resultant(const BinaryForm& f, const BinaryForm& g) {
  int n = f.degree(), m = g.degree();
  if (n == 0 && m == 0) return Rational(1);
  // Sylvester matrix over scaled integer rows, Bareiss determinant.
  int size = n + m;
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(size),
                                      std::vector<Integer>(static_cast<std::size_t>(size), Integer(0)));
  Rational scale(1);
  auto fill = [&](const BinaryForm& h, int copies, int row0) {
    for (int r = 0; r < copies; ++r) {
      Integer den(1);
      for (const auto& v : h.c_)
        if (v != 0) den = lcm(den, v.get_den());
      scale /= Rational(pow_rational(Rational(den), 1));
      for (int i = 0; i <= h.degree(); ++i) {
        Rational v = h.c_[static_cast<std::size_t>(h.degree() - i)] * Rational(den);
        a[static_cast<std::size_t>(row0 + r)][static_cast<std::size_t>(r + i)] = v.get_num();
      }
    }
  };
  fill(f, m, 0);
  fill(g, n, m);
  // Bareiss elimination.
  Integer prev(1);
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int piv = -1;
      for (int r = k + 1; r < size; ++r)
        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return Rational(0);
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(piv)]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        Integer t = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                        a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t;
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
    }
    prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  Rational det(a[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)]);
  if (sign < 0) det = -det;
  return det * scale;
}

std::string BinaryForm::to_string(const std::string& xname, const std::string& yname) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  int n = degree();
  for (int i = n; i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    int ey = n - i;
    bool has_vars = i > 0 || ey > 0;
    bool unit = (a == 1);
    if (!unit || !has_vars) out << a.get_str();
    bool need_star = !unit || !has_vars;
    if (i > 0) {
      if (need_star) out << "*";
      out << xname;
      if (i > 1) out << "^" << i;
      need_star = true;
    }
    if (ey > 0) {
      if (need_star) out << "*";
      out << yname;
      if (ey > 1) out << "^" << ey;
    }
  }
  return out.str();
}

}  // namespace cremona
