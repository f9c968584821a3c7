#include "cremona/numberfield.hpp"

#include <stdexcept>

#include "upoly.hpp"

namespace cremona {

using upoly::udeg;
using upoly::uhalf_eea;
using upoly::UPoly;
using upoly::urem;
using upoly::utrim;

NumberField::NumberField(std::vector<Rational> modulus) {
  utrim(modulus);
  if (udeg(modulus) < 1) throw std::invalid_argument("number field modulus must have degree >= 1");
  Rational lc = modulus.back();
  for (auto& c : modulus) c /= lc;
  q_ = std::move(modulus);
}

NumberField::Elem NumberField::reduce(std::vector<Rational> p) const {
  utrim(p);
  return urem(std::move(p), q_);
}

NumberField::Elem NumberField::from_rational(const Rational& x) const {
  if (x == 0) return {};
  return {x};
}

NumberField::Elem NumberField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  if (r.size() < b.size()) r.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  utrim(r);
  return r;
}

NumberField::Elem NumberField::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  if (r.size() < b.size()) r.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  utrim(r);
  return r;
}

NumberField::Elem NumberField::mul(const Elem& a, const Elem& b) const {
  if (a.empty() || b.empty()) return {};
  return reduce(upoly::umul(a, b));
}

NumberField::Elem NumberField::neg(Elem a) const {
  for (auto& c : a) c = -c;
  return a;
}

NumberField::Elem NumberField::inv(const Elem& a) const {
  if (a.empty()) throw std::invalid_argument("inverse of zero in number field");
  auto [g, s] = uhalf_eea(a, q_);
  if (udeg(g) == 0) return reduce(std::move(s));
  // g is a proper monic factor: a vanishes on some roots of the modulus.
  throw ModulusSplit{std::move(g)};
}

void kp_trim(KPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int kp_deg(const KPoly& p) { return static_cast<int>(p.size()) - 1; }

bool kp_is_zero(const KPoly& p) {
  for (const auto& c : p)
    if (!c.empty()) return false;
  return true;
}

KPoly kp_mul(const NumberField& K, const KPoly& a, const KPoly& b) {
  if (kp_is_zero(a) || kp_is_zero(b)) return {};
  KPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].empty()) continue;
      r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
  }
  kp_trim(r);
  return r;
}

KPoly kp_rem(const NumberField& K, KPoly a, const KPoly& b) {
  kp_trim(a);
  KPoly d = b;
  kp_trim(d);
  if (d.empty()) throw std::invalid_argument("remainder by zero polynomial over number field");
  NumberField::Elem lead_inv = K.inv(d.back());
  while (!a.empty() && kp_deg(a) >= kp_deg(d)) {
    NumberField::Elem f = K.mul(a.back(), lead_inv);
    int shift = kp_deg(a) - kp_deg(d);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i].empty()) continue;
      auto& slot = a[i + static_cast<std::size_t>(shift)];
      slot = K.sub(slot, K.mul(f, d[i]));
    }
    a.pop_back();
    kp_trim(a);
  }
  return a;
}

KPoly kp_monic(const NumberField& K, KPoly p) {
  kp_trim(p);
  if (p.empty()) return p;
  NumberField::Elem lead_inv = K.inv(p.back());
  for (auto& c : p)
    if (!c.empty()) c = K.mul(c, lead_inv);
  return p;
}

KPoly kp_gcd(const NumberField& K, KPoly a, KPoly b) {
  kp_trim(a);
  kp_trim(b);
  while (!b.empty()) {
    KPoly r = kp_rem(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return kp_monic(K, std::move(a));
}

KPoly kp_deriv(const NumberField& K, const KPoly& p) {
  KPoly r;
  for (std::size_t i = 1; i < p.size(); ++i)
    r.push_back(p[i].empty() ? NumberField::Elem{}
                             : K.mul(p[i], K.from_rational(Rational(static_cast<long>(i)))));
  kp_trim(r);
  return r;
}

bool kp_divides(const NumberField& K, const KPoly& d, const KPoly& a) {
  if (kp_is_zero(a)) return true;
  KPoly dd = d;
  kp_trim(dd);
  if (dd.empty()) return false;
  return kp_rem(K, a, dd).empty();
}

bool kb_is_zero(const KBinary& f) { return kp_is_zero(f.c); }

namespace {

// Index of the first unit coefficient scanning by `step`; a zero divisor
// encountered first forces a branch split, because the multiplicity
// genuinely differs between the factors.
int unit_scan(const NumberField& K, const KPoly& c, int from, int step) {
  for (int i = from; i >= 0 && i < static_cast<int>(c.size()); i += step) {
    const auto& e = c[static_cast<std::size_t>(i)];
    if (e.empty()) continue;
    K.inv(e);  // unit or ModulusSplit
    return i;
  }
  throw std::invalid_argument("zero binary form has no multiplicity");
}

}  // namespace

int kb_u_mult(const NumberField& K, const KBinary& f) { return unit_scan(K, f.c, 0, 1); }

int kb_v_mult(const NumberField& K, const KBinary& f) {
  return f.degree() - unit_scan(K, f.c, f.degree(), -1);
}

namespace {

// The dehomogenized core between the u- and v-multiplicities.
KPoly kb_core(const KBinary& f, int ku, int kv) {
  KPoly core(f.c.begin() + ku, f.c.end() - kv);
  return core;
}

KBinary kb_rehom(KPoly core, int ku, int kv) {
  KBinary r;
  r.c.assign(static_cast<std::size_t>(ku + kv + kp_deg(core)) + 1, NumberField::Elem{});
  for (std::size_t i = 0; i < core.size(); ++i) r.c[static_cast<std::size_t>(ku) + i] = core[i];
  return r;
}

}  // namespace

KBinary kb_gcd(const NumberField& K, const KBinary& f, const KBinary& g) {
  if (kb_is_zero(f)) return g;
  if (kb_is_zero(g)) return f;
  int kuf = kb_u_mult(K, f), kvf = kb_v_mult(K, f);
  int kug = kb_u_mult(K, g), kvg = kb_v_mult(K, g);
  KPoly h = kp_gcd(K, kb_core(f, kuf, kvf), kb_core(g, kug, kvg));
  return kb_rehom(std::move(h), std::min(kuf, kug), std::min(kvf, kvg));
}

KBinary kb_squarefree(const NumberField& K, const KBinary& f) {
  if (kb_is_zero(f)) return f;
  int ku = kb_u_mult(K, f), kv = kb_v_mult(K, f);
  KPoly core = kb_core(f, ku, kv);
  KPoly g = kp_gcd(K, core, kp_deriv(K, core));
  KPoly reduced;
  if (kp_deg(g) < 1) {
    reduced = std::move(core);
  } else {
    // core / g by monic long division; g divides core exactly.
    KPoly num = core;
    KPoly quot(core.size() - g.size() + 1);
    NumberField::Elem lead_inv = K.inv(g.back());
    while (!num.empty() && kp_deg(num) >= kp_deg(g)) {
      NumberField::Elem f2 = K.mul(num.back(), lead_inv);
      int shift = kp_deg(num) - kp_deg(g);
      quot[static_cast<std::size_t>(shift)] = f2;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].empty()) continue;
        auto& slot = num[i + static_cast<std::size_t>(shift)];
        slot = K.sub(slot, K.mul(f2, g[i]));
      }
      num.pop_back();
      kp_trim(num);
    }
    reduced = std::move(quot);
    kp_trim(reduced);
  }
  return kb_rehom(std::move(reduced), ku > 0 ? 1 : 0, kv > 0 ? 1 : 0);
}

bool kb_divides(const NumberField& K, const KBinary& d, const KBinary& f) {
  if (kb_is_zero(f)) return true;
  if (kb_is_zero(d)) return false;
  int kud = kb_u_mult(K, d), kvd = kb_v_mult(K, d);
  int kuf = kb_u_mult(K, f), kvf = kb_v_mult(K, f);
  if (kud > kuf || kvd > kvf) return false;
  return kp_divides(K, kb_core(d, kud, kvd), kb_core(f, kuf, kvf));
}

}  // namespace cremona
