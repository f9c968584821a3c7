#include "cremona/multipoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cremona {

MultiPoly::MultiPoly(int nvars, const TermMap& terms) : nvars_(nvars), degree_(0) {
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("bad variable count");
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    for (int i = nvars; i < kMaxVars; ++i)
      if (e[i] != 0) throw std::invalid_argument("exponent outside variable range");
    int t = expo_total(e);
    if (first) {
      degree_ = t;
      first = false;
    } else if (t != degree_) {
      throw std::invalid_argument("inhomogeneous term set");
    }
    terms_.emplace(e, c);
  }
  if (terms_.empty()) degree_ = 0;
}

MultiPoly MultiPoly::monomial(int nvars, const Expo& e, const Rational& c) {
  TermMap m;
  m.emplace(e, c);
  return MultiPoly(nvars, m);
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  Expo e{};
  e[i] = 1;
  return monomial(nvars, e, Rational(1));
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  return monomial(nvars, Expo{}, c);
}

Rational MultiPoly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
    throw std::invalid_argument("degree mismatch in sum");
  TermMap m = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto it = m.find(e);
    if (it == m.end()) {
      m.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) m.erase(it);
    }
  }
  return MultiPoly(nvars_, m);
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const { return scaled(Rational(-1)); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c == 0) return zero(nvars_);
  TermMap m;
  for (const auto& [e, v] : terms_) m.emplace(e, v * c);
  return MultiPoly(nvars_, m);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  TermMap m;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Expo e{};
      for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint8_t>(e1[i] + e2[i]);
      auto it = m.find(e);
      if (it == m.end()) {
        m.emplace(e, c1 * c2);
      } else {
        it->second += c1 * c2;
      }
    }
  }
  return MultiPoly(nvars_, m);
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    if (e >>= 1u) base = base * base;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

int MultiPoly::max_power(int i) const {
  int best = -1;
  for (const auto& [e, c] : terms_)
    if (e[i] > best) best = e[i];
  return best;
}

int MultiPoly::mult_at_coord_point(int i) const {
  if (is_zero()) throw std::invalid_argument("multiplicity of the zero polynomial");
  return degree_ - max_power(i);
}

MultiPoly MultiPoly::graded_piece(int i, int k) const {
  TermMap m;
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Expo r = e;
    r[i] = 0;
    m.emplace(r, c);
  }
  return MultiPoly(nvars_, m);
}

Rational MultiPoly::eval(const std::array<Rational, kMaxVars>& point) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) t *= pow_rational(point[i], e[i]);
    acc += t;
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_vars = expo_total(e) > 0;
    bool unit = (a == 1);
    if (!unit || !has_vars) out << a.get_str();
    bool need_star = !unit || !has_vars;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!e[i]) continue;
      if (need_star) out << "*";
      out << "x" << i;
      if (e[i] > 1) out << "^" << int(e[i]);
      need_star = true;
    }
  }
  return out.str();
}

namespace {

// Splits a polynomial body into signed term strings; whitespace insignificant.
std::vector<std::pair<int, std::string>> split_terms(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<std::pair<int, std::string>> parts;
  int sign = 1;
  std::string cur;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    i = 1;
  }
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '+' || c == '-') {
      if (cur.empty()) throw std::invalid_argument("dangling sign in polynomial");
      parts.emplace_back(sign, cur);
      cur.clear();
      sign = c == '-' ? -1 : 1;
    } else {
      cur.push_back(c);
    }
  }
  if (cur.empty()) throw std::invalid_argument("dangling sign in polynomial");
  parts.emplace_back(sign, cur);
  return parts;
}

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, int nvars) {
  auto parts = split_terms(text);
  TermMap m;
  for (const auto& [sign, term] : parts) {
    Rational coeff(sign);
    Expo e{};
    size_t i = 0;
    bool saw_factor = false;
    while (i < term.size()) {
      size_t j = i;
      while (j < term.size() && term[j] != '*') ++j;
      std::string factor = term.substr(i, j - i);
      if (factor.empty()) throw std::invalid_argument("empty factor in term: " + term);
      if (factor[0] == 'x') {
        size_t caret = factor.find('^');
        std::string var = caret == std::string::npos ? factor.substr(1) : factor.substr(1, caret - 1);
        if (var.size() != 1 || var[0] < '0' || var[0] > '4')
          throw std::invalid_argument("bad variable: " + factor);
        int idx = var[0] - '0';
        if (idx >= nvars) throw std::invalid_argument("variable outside range: " + factor);
        int exp = 1;
        if (caret != std::string::npos) {
          std::string es = factor.substr(caret + 1);
          if (es.empty()) throw std::invalid_argument("bad exponent: " + factor);
          exp = std::stoi(es);
          if (exp < 0) throw std::invalid_argument("negative exponent: " + factor);
        }
        e[idx] = static_cast<std::uint8_t>(e[idx] + exp);
      } else {
        coeff *= parse_rational(factor);
      }
      saw_factor = true;
      i = j + (j < term.size() ? 1 : 0);
    }
    if (!saw_factor) throw std::invalid_argument("empty term");
    auto it = m.find(e);
    if (it == m.end()) {
      m.emplace(e, coeff);
    } else {
      it->second += coeff;
    }
  }
  MultiPoly p(nvars, m);
  if (p.is_zero() && !m.empty()) return zero(nvars);
  return p;
}

}  // namespace cremona
