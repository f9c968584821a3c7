#include "cremona/biform.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "upoly.hpp"

namespace cremona {

namespace {

using upoly::UPoly;
using upoly::uadd;
using upoly::udeg;
using upoly::udiv_exact;
using upoly::ugcd;
using upoly::umul;
using upoly::uscale;
using upoly::utrim;

// Bivariate polynomials as dense x-coefficient vectors over Q[y].
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int bdeg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (const auto& c : p)
    if (!c.empty()) g = ugcd(g, c);
  return g;
}

BPoly bprimitive(BPoly p, const UPoly& content) {
  if (content.empty()) return p;
  for (auto& c : p)
    if (!c.empty()) c = udiv_exact(c, content);
  return p;
}

// Pseudo-remainder of a by b in x over Q[y].
BPoly bprem(BPoly a, const BPoly& b) {
  btrim(a);
  int db = bdeg(b);
  const UPoly& lb = b.back();
  while (!a.empty() && bdeg(a) >= db) {
    UPoly la = a.back();
    int shift = bdeg(a) - db;
    // a = lb*a - la*x^shift*b
    for (auto& c : a) c = umul(c, lb);
    for (int i = 0; i <= db; ++i) {
      UPoly sub = umul(la, b[static_cast<std::size_t>(i)]);
      a[static_cast<std::size_t>(i + shift)] =
          uadd(a[static_cast<std::size_t>(i + shift)], uscale(sub, Rational(-1)));
    }
    btrim(a);
  }
  return a;
}

BPoly bgcd(BPoly a, BPoly b) {
  btrim(a);
  btrim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  UPoly ca = bcontent(a), cb = bcontent(b);
  a = bprimitive(std::move(a), ca);
  b = bprimitive(std::move(b), cb);
  if (bdeg(a) < bdeg(b)) std::swap(a, b);
  while (!b.empty()) {
    BPoly r = bprem(a, b);
    btrim(r);
    if (!r.empty()) r = bprimitive(std::move(r), bcontent(r));
    a = std::move(b);
    b = std::move(r);
  }
  UPoly cg = ugcd(ca, cb);
  if (udeg(cg) > 0) {
    for (auto& c : a) c = umul(c, cg);
  }
  return a;
}

}  // namespace

BiForm::BiForm(int a, int b) : a_(a), b_(b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative bidegree");
  c_.assign(static_cast<std::size_t>(a + 1) * static_cast<std::size_t>(b + 1), Rational(0));
}

BiForm BiForm::constant(const Rational& q) {
  BiForm f(0, 0);
  f.set(0, 0, q);
  return f;
}

BiForm BiForm::term(int a, int b, int i, int j, const Rational& q) {
  BiForm f(a, b);
  f.set(i, j, q);
  return f;
}

bool BiForm::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

BiForm BiForm::operator+(const BiForm& o) const {
  if (a_ != o.a_ || b_ != o.b_) throw std::invalid_argument("bidegree mismatch in sum");
  BiForm r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
  return r;
}

BiForm BiForm::operator-(const BiForm& o) const { return *this + (-o); }

BiForm BiForm::operator-() const { return scaled(Rational(-1)); }

BiForm BiForm::scaled(const Rational& q) const {
  BiForm r = *this;
  for (auto& v : r.c_) v *= q;
  return r;
}

BiForm BiForm::operator*(const BiForm& o) const {
  BiForm r(a_ + o.a_, b_ + o.b_);
  for (int i = 0; i <= a_; ++i)
    for (int j = 0; j <= b_; ++j) {
      const Rational& x = at(i, j);
      if (x == 0) continue;
      for (int k = 0; k <= o.a_; ++k)
        for (int l = 0; l <= o.b_; ++l) {
          const Rational& y = o.at(k, l);
          if (y != 0) r.c_[r.idx(i + k, j + l)] += x * y;
        }
    }
  return r;
}

bool BiForm::operator==(const BiForm& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

Rational BiForm::eval(const Rational& s, const Rational& t, const Rational& u,
                      const Rational& v) const {
  Rational acc(0);
  for (int i = 0; i <= a_; ++i)
    for (int j = 0; j <= b_; ++j) {
      const Rational& c = at(i, j);
      if (c == 0) continue;
      acc += c * pow_rational(s, static_cast<unsigned>(i)) *
             pow_rational(t, static_cast<unsigned>(a_ - i)) *
             pow_rational(u, static_cast<unsigned>(j)) *
             pow_rational(v, static_cast<unsigned>(b_ - j));
    }
  return acc;
}

BinaryForm BiForm::restrict_fiber(const Rational& u0, const Rational& v0) const {
  std::vector<Rational> r(static_cast<std::size_t>(a_) + 1, Rational(0));
  for (int i = 0; i <= a_; ++i) {
    Rational acc(0);
    for (int j = 0; j <= b_; ++j) {
      const Rational& c = at(i, j);
      if (c == 0) continue;
      acc += c * pow_rational(u0, static_cast<unsigned>(j)) *
             pow_rational(v0, static_cast<unsigned>(b_ - j));
    }
    r[static_cast<std::size_t>(i)] = acc;
  }
  return BinaryForm(std::move(r));
}

BinaryForm BiForm::restrict_section(const Rational& s0, const Rational& t0) const {
  std::vector<Rational> r(static_cast<std::size_t>(b_) + 1, Rational(0));
  for (int j = 0; j <= b_; ++j) {
    Rational acc(0);
    for (int i = 0; i <= a_; ++i) {
      const Rational& c = at(i, j);
      if (c == 0) continue;
      acc += c * pow_rational(s0, static_cast<unsigned>(i)) *
             pow_rational(t0, static_cast<unsigned>(a_ - i));
    }
    r[static_cast<std::size_t>(j)] = acc;
  }
  return BinaryForm(std::move(r));
}

BiForm BiForm::derivative_s() const {
  if (a_ == 0) return BiForm(0, b_);
  BiForm r(a_ - 1, b_);
  for (int i = 1; i <= a_; ++i)
    for (int j = 0; j <= b_; ++j)
      if (at(i, j) != 0) r.set(i - 1, j, at(i, j) * Rational(i));
  return r;
}

BiForm BiForm::derivative_t() const {
  if (a_ == 0) return BiForm(0, b_);
  BiForm r(a_ - 1, b_);
  for (int i = 0; i < a_; ++i)
    for (int j = 0; j <= b_; ++j)
      if (at(i, j) != 0) r.set(i, j, at(i, j) * Rational(a_ - i));
  return r;
}

BiForm BiForm::derivative_u() const {
  if (b_ == 0) return BiForm(a_, 0);
  BiForm r(a_, b_ - 1);
  for (int i = 0; i <= a_; ++i)
    for (int j = 1; j <= b_; ++j)
      if (at(i, j) != 0) r.set(i, j - 1, at(i, j) * Rational(j));
  return r;
}

BiForm BiForm::derivative_v() const {
  if (b_ == 0) return BiForm(a_, 0);
  BiForm r(a_, b_ - 1);
  for (int i = 0; i <= a_; ++i)
    for (int j = 0; j < b_; ++j)
      if (at(i, j) != 0) r.set(i, j, at(i, j) * Rational(b_ - j));
  return r;
}

int BiForm::mult_s() const {
  for (int i = 0; i <= a_; ++i)
    for (int j = 0; j <= b_; ++j)
      if (at(i, j) != 0) return i;
  return 0;
}

int BiForm::mult_t() const {
  for (int i = a_; i >= 0; --i)
    for (int j = 0; j <= b_; ++j)
      if (at(i, j) != 0) return a_ - i;
  return 0;
}

int BiForm::mult_u() const {
  for (int j = 0; j <= b_; ++j)
    for (int i = 0; i <= a_; ++i)
      if (at(i, j) != 0) return j;
  return 0;
}

int BiForm::mult_v() const {
  for (int j = b_; j >= 0; --j)
    for (int i = 0; i <= a_; ++i)
      if (at(i, j) != 0) return b_ - j;
  return 0;
}

BiForm BiForm::transposed() const {
  BiForm r(b_, a_);
  for (int i = 0; i <= a_; ++i)
    for (int j = 0; j <= b_; ++j) r.set(j, i, at(i, j));
  return r;
}

BiForm BiForm::normalized() const {
  if (is_zero()) return *this;
  Integer den(1);
  for (const auto& v : c_)
    if (v != 0) den = lcm(den, v.get_den());
  Integer num(0);
  for (const auto& v : c_)
    if (v != 0) num = ::gcd(num, Integer(v.get_num() * den / v.get_den()));
  Rational scale(den, num);
  scale.canonicalize();
  BiForm r = scaled(scale);
  for (const auto& v : r.c_) {
    if (v != 0) {
      if (v < 0) r = r.scaled(Rational(-1));
      break;
    }
  }
  return r;
}

std::optional<BiForm> BiForm::divide_exact(const BiForm& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return std::nullopt;
  int qa = a_ - divisor.a_;
  int qb = b_ - divisor.b_;
  if (qa < 0 || qb < 0) return std::nullopt;
  // Divisor's lex-least nonzero cell anchors a triangular recurrence; the
  // full product check afterwards validates the remaining constraints.
  int p = -1, q = -1;
  for (int i = 0; i <= divisor.a_ && p < 0; ++i)
    for (int j = 0; j <= divisor.b_; ++j)
      if (divisor.at(i, j) != 0) {
        p = i;
        q = j;
        break;
      }
  BiForm quot(qa, qb);
  for (int i = 0; i <= qa; ++i)
    for (int j = 0; j <= qb; ++j) {
      int fi = i + p, fj = j + q;
      Rational acc = (fi <= a_ && fj <= b_) ? at(fi, fj) : Rational(0);
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= qb; ++l) {
          if (k == i && l >= j) continue;
          const Rational& qc = quot.at(k, l);
          if (qc == 0) continue;
          int di = fi - k, dj = fj - l;
          if (di >= 0 && di <= divisor.a_ && dj >= 0 && dj <= divisor.b_)
            acc -= qc * divisor.at(di, dj);
        }
      quot.set(i, j, acc / divisor.at(p, q));
    }
  if (quot * divisor == *this) return quot;
  return std::nullopt;
}

BiForm BiForm::gcd(const BiForm& f, const BiForm& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  int ks = std::min(f.mult_s(), g.mult_s());
  int kt = std::min(f.mult_t(), g.mult_t());
  int ku = std::min(f.mult_u(), g.mult_u());
  int kv = std::min(f.mult_v(), g.mult_v());
  // Strip monomial content, dehomogenize (s,t)->x, (u,v)->y, run the
  // primitive PRS, rehomogenize by the result's own bidegree.
  auto dehom = [](const BiForm& h) {
    int ms = h.mult_s(), mt = h.mult_t(), mu = h.mult_u(), mv = h.mult_v();
    BPoly p(static_cast<std::size_t>(h.deg_st() - ms - mt) + 1);
    for (int i = ms; i <= h.deg_st() - mt; ++i) {
      UPoly row;
      for (int j = mu; j <= h.deg_uv() - mv; ++j)
        row.push_back(h.at(i, j));
      utrim(row);
      p[static_cast<std::size_t>(i - ms)] = std::move(row);
    }
    btrim(p);
    return p;
  };
  BPoly gg = bgcd(dehom(f), dehom(g));
  btrim(gg);
  int dx = bdeg(gg);
  int dy = 0;
  for (const auto& row : gg) dy = std::max(dy, udeg(row));
  BiForm r(ks + kt + dx, ku + kv + dy);
  for (int i = 0; i <= dx; ++i) {
    const UPoly& row = gg[static_cast<std::size_t>(i)];
    for (int j = 0; j <= udeg(row); ++j)
      r.set(ks + i, ku + j, row[static_cast<std::size_t>(j)]);
  }
  return r.normalized();
}

BiForm BiForm::squarefree_part() const {
  if (is_zero()) return *this;
  BiForm g1 = gcd(*this, derivative_s());
  BiForm g2 = gcd(g1, derivative_u());
  BiForm g3 = gcd(g2, derivative_t());
  BiForm g = gcd(g3, derivative_v());
  auto q = divide_exact(g);
  if (!q) throw std::logic_error("squarefree part: gcd does not divide the form");
  return q->normalized();
}

std::string BiForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = a_; i >= 0; --i)
    for (int j = b_; j >= 0; --j) {
      const Rational& c = at(i, j);
      if (c == 0) continue;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      int et = a_ - i, ev = b_ - j;
      bool has_vars = i > 0 || et > 0 || j > 0 || ev > 0;
      bool unit = (mag == 1);
      if (!unit || !has_vars) out << mag.get_str();
      bool need_star = !unit || !has_vars;
      auto emit = [&](const char* name, int e) {
        if (e <= 0) return;
        if (need_star) out << "*";
        out << name;
        if (e > 1) out << "^" << e;
        need_star = true;
      };
      emit("s", i);
      emit("t", et);
      emit("u", j);
      emit("v", ev);
    }
  return out.str();
}

BiForm BiForm::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty form");
  struct RawTerm {
    Rational coeff;
    int es = 0, et = 0, eu = 0, ev = 0;
  };
  std::vector<RawTerm> raw;
  int sign = 1;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    i = 1;
  }
  std::string cur;
  auto flush = [&](int sg, const std::string& term) {
    if (term.empty()) throw std::invalid_argument("dangling sign in form");
    RawTerm rt;
    rt.coeff = Rational(sg);
    std::size_t k = 0;
    while (k < term.size()) {
      std::size_t j = k;
      while (j < term.size() && term[j] != '*') ++j;
      std::string factor = term.substr(k, j - k);
      if (factor.empty()) throw std::invalid_argument("empty factor in term: " + term);
      char v = factor[0];
      if (v == 's' || v == 't' || v == 'u' || v == 'v') {
        int e = 1;
        if (factor.size() > 1) {
          if (factor[1] != '^') throw std::invalid_argument("bad factor: " + factor);
          e = std::stoi(factor.substr(2));
          if (e < 0) throw std::invalid_argument("negative exponent: " + factor);
        }
        if (v == 's') rt.es += e;
        if (v == 't') rt.et += e;
        if (v == 'u') rt.eu += e;
        if (v == 'v') rt.ev += e;
      } else {
        rt.coeff *= parse_rational(factor);
      }
      k = j + (j < term.size() ? 1 : 0);
    }
    raw.push_back(rt);
  };
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '+' || ch == '-') {
      flush(sign, cur);
      cur.clear();
      sign = ch == '-' ? -1 : 1;
    } else {
      cur.push_back(ch);
    }
  }
  flush(sign, cur);
  int a = -1, b = -1;
  bool all_zero = true;
  for (const auto& rt : raw) {
    if (rt.coeff == 0) continue;
    all_zero = false;
    int ta = rt.es + rt.et, tb = rt.eu + rt.ev;
    if (a < 0) {
      a = ta;
      b = tb;
    } else if (ta != a || tb != b) {
      throw std::invalid_argument("inhomogeneous bidegrees in form: " + text);
    }
  }
  if (all_zero) return BiForm(0, 0);
  BiForm f(a, b);
  for (const auto& rt : raw) {
    if (rt.coeff == 0) continue;
    f.set(rt.es, rt.eu, f.at(rt.es, rt.eu) + rt.coeff);
  }
  return f;
}

BinaryForm resultant_st(const BiForm& f, const BiForm& g) {
  int af = f.deg_st(), ag = g.deg_st();
  if (af == 0 || ag == 0)
    throw std::invalid_argument("resultant needs positive (s,t)-degrees");
  int target = af * g.deg_uv() + ag * f.deg_uv();
  // Evaluate at u = k, v = 1 and interpolate; v-power factors come out in the
  // rehomogenization since the interpolant's degree stays <= target.
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= target; ++k) {
    Rational u0(k), v0(1);
    BinaryForm fr = f.restrict_fiber(u0, v0);
    BinaryForm gr = g.restrict_fiber(u0, v0);
    xs.emplace_back(u0);
    ys.push_back(BinaryForm::resultant(fr, gr));
  }
  // Lagrange interpolation, exact.
  std::vector<Rational> poly(static_cast<std::size_t>(target) + 1, Rational(0));
  for (std::size_t m = 0; m < xs.size(); ++m) {
    if (ys[m] == 0) continue;
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == m) continue;
      // basis *= (x - xs[j])
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[m] - xs[j];
    }
    Rational w = ys[m] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += basis[k] * w;
  }
  return BinaryForm(std::move(poly));
}

BinaryForm resultant_uv(const BiForm& f, const BiForm& g) {
  return resultant_st(f.transposed(), g.transposed());
}

BiForm substitute(const MultiPoly& f, const std::vector<BiForm>& phi) {
  if (static_cast<int>(phi.size()) < f.nvars())
    throw std::invalid_argument("substitution tuple too short");
  int a = phi[0].deg_st(), b = phi[0].deg_uv();
  for (const auto& component : phi)
    if (component.deg_st() != a || component.deg_uv() != b)
      throw std::invalid_argument("substitution components of unequal bidegree");
  if (f.is_zero()) return BiForm(0, 0);
  int d = f.degree();
  BiForm acc(d * a, d * b);
  for (const auto& [e, c] : f.terms()) {
    BiForm term = BiForm::constant(c);
    for (int i = 0; i < kMaxVars; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * phi[static_cast<std::size_t>(i)];
    acc = acc + term;
  }
  return acc;
}

}  // namespace cremona
