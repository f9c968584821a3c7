#include "cremona/maps.hpp"

#include <algorithm>
#include <stdexcept>

#include "cremona/biform.hpp"
#include "cremona/rng.hpp"

namespace cremona {

namespace {

// Move slots 1..4 down to 0..3; slot 0 must be unused.
MultiPoly shift_down(const MultiPoly& f) {
  MultiPoly::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] != 0) throw std::logic_error("shift of a polynomial using slot 0");
    Expo ne{};
    for (int i = 1; i < kMaxVars; ++i) ne[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
    t.emplace(ne, c);
  }
  return MultiPoly(4, t);
}

// Reinterpret a 5-variable polynomial not using slot 4 in 4 variables.
MultiPoly narrow4(const MultiPoly& f) {
  MultiPoly::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    if (e[4] != 0) throw std::logic_error("narrowing a polynomial using slot 4");
    t.emplace(e, c);
  }
  return MultiPoly(4, t);
}

BiForm random_segre_form(Rng& rng) {
  BiForm f(1, 1);
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) f.set(i, j, Rational(rng.integer_in(-9, 9)));
  return f;
}

// Certifies gcd(f, g) constant: a nonconstant common factor h restricts to
// a nonconstant or zero divisor of both restrictions under any bidegree
// (1,1) substitution, so one draw with a constant nonzero gcd is an
// unconditional proof. Draws can fail sporadically; three are allowed.
bool certified_coprime(const MultiPoly& f, const MultiPoly& g, Rng& rng) {
  if (f.is_zero() || g.is_zero()) return false;
  if (f.degree() == 0 || g.degree() == 0) return true;
  int nv = std::max(f.nvars(), g.nvars());
  for (int draw = 0; draw < 3; ++draw) {
    std::vector<BiForm> phi;
    for (int i = 0; i < nv; ++i) phi.push_back(random_segre_form(rng));
    BiForm fr = substitute(f, std::vector<BiForm>(phi.begin(), phi.begin() + f.nvars()));
    BiForm gr = substitute(g, std::vector<BiForm>(phi.begin(), phi.begin() + g.nvars()));
    if (fr.is_zero() || gr.is_zero()) continue;
    BiForm d = BiForm::gcd(fr, gr);
    if (d.deg_st() + d.deg_uv() == 0) return true;
  }
  return false;
}

std::array<Rational, kMaxVars> pad_point(const std::vector<Rational>& p) {
  std::array<Rational, kMaxVars> a{};
  for (std::size_t i = 0; i < p.size(); ++i) a[i] = p[i];
  return a;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

int RationalMap::degree() const {
  for (const auto& c : components)
    if (!c.is_zero()) return c.degree();
  return 0;
}

RationalMap make_rational_map(std::vector<MultiPoly> components) {
  if (components.size() < 2) throw std::invalid_argument("a map needs at least two components");
  int nv = components[0].nvars();
  int deg = -1;
  for (const auto& c : components) {
    if (c.nvars() != nv) throw std::invalid_argument("components disagree on variable count");
    if (c.is_zero()) continue;
    if (deg < 0) deg = c.degree();
    if (c.degree() != deg) throw std::invalid_argument("components have mixed degrees");
  }
  if (deg < 0) throw std::invalid_argument("all components are zero");

  RationalMap m;
  m.source_dim = nv - 1;
  m.target_dim = static_cast<int>(components.size()) - 1;
  m.components = std::move(components);

  Rng probe(0xAB5EED);
  bool defined = false;
  for (int attempt = 0; attempt < 8 && !defined; ++attempt) {
    std::vector<Rational> p;
    for (int i = 0; i < nv; ++i) p.push_back(probe.rational(7));
    defined = !all_zero(eval_map(m, p));
  }
  if (!defined) throw std::invalid_argument("map undefined at every sampled point");
  return m;
}

std::vector<Rational> eval_map(const RationalMap& m, const std::vector<Rational>& p) {
  if (static_cast<int>(p.size()) != m.source_dim + 1)
    throw std::invalid_argument("point has the wrong dimension");
  std::array<Rational, kMaxVars> a = pad_point(p);
  std::vector<Rational> out;
  for (const auto& c : m.components) out.push_back(c.eval(a));
  return out;
}

MultiPoly compose(const MultiPoly& f, const std::vector<MultiPoly>& args) {
  if (static_cast<int>(args.size()) != f.nvars())
    throw std::invalid_argument("argument count differs from the variable count");
  int nv = args[0].nvars();
  for (const auto& a : args)
    if (a.nvars() != nv) throw std::invalid_argument("arguments disagree on variable count");
  MultiPoly acc(nv);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(nv, c);
    for (int i = 0; i < f.nvars(); ++i)
      if (e[static_cast<std::size_t>(i)] > 0)
        term = term * args[static_cast<std::size_t>(i)].pow(e[static_cast<std::size_t>(i)]);
    acc = acc + term;
  }
  return acc;
}

bool projectively_equal(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  if (p.size() != q.size()) return false;
  if (all_zero(p) || all_zero(q)) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] * q[j] != p[j] * q[i]) return false;
  return true;
}

RationalMap monoid_section(const Monoid& F) {
  if (std::find(F.vertexes.begin(), F.vertexes.end(), 0) == F.vertexes.end())
    throw std::invalid_argument("section needs a monoid with vertex p0");
  MultiPoly fp = F.form.graded_piece(0, 1);
  MultiPoly fd = F.form.graded_piece(0, 0);
  if (fp.is_zero()) throw std::invalid_argument("vertex piece vanishes: the form is a cone");
  if (fd.is_zero())
    throw std::domain_error("section components share a factor (reducible form)");
  Rng cert(0xC0F0EE);
  if (!certified_coprime(fd, fp, cert))
    throw std::domain_error("section components share a factor (reducible form)");

  MultiPoly fp4 = shift_down(fp);
  std::vector<MultiPoly> comps{-shift_down(fd)};
  for (int i = 0; i < 4; ++i) comps.push_back(MultiPoly::variable(4, i) * fp4);
  return make_rational_map(std::move(comps));
}

CremonaMap cremona_from_monoid(const Monoid& F) {
  auto has = [&](int v) {
    return std::find(F.vertexes.begin(), F.vertexes.end(), v) != F.vertexes.end();
  };
  if (!has(0) || !has(4))
    throw std::invalid_argument("the construction needs both vertexes p0 and p4");

  MultiPoly g = F.form.graded_piece(0, 1).graded_piece(4, 1);
  MultiPoly gp = F.form.graded_piece(0, 1).graded_piece(4, 0);
  MultiPoly gpp = F.form.graded_piece(0, 0).graded_piece(4, 1);
  MultiPoly gd = F.form.graded_piece(0, 0).graded_piece(4, 0);
  MultiPoly x0 = MultiPoly::variable(kMaxVars, 0), x4 = MultiPoly::variable(kMaxVars, 4);

  MultiPoly den0 = x4 * g + gp;   // denominator of the section at p0
  MultiPoly den4 = x0 * g + gpp;  // denominator of the section at p4
  if (den0.is_zero()) throw std::invalid_argument("denominator at p0 vanishes: cone over p0");
  if (den4.is_zero()) throw std::invalid_argument("denominator at p4 vanishes: cone over p4");
  MultiPoly a = -(x4 * gpp + gd);
  MultiPoly b = -(x0 * gp + gd);
  if (a.is_zero()) throw std::domain_error("forward map collapses");
  if (b.is_zero()) throw std::domain_error("inverse map collapses");

  Rng cert(0x5E6E17);
  if (!certified_coprime(a, den0, cert) || !certified_coprime(b, den4, cert))
    throw std::domain_error("map components share a factor (reducible form)");

  MultiPoly d0 = shift_down(den0);
  std::vector<MultiPoly> fwd{shift_down(a)};
  for (int i = 0; i < 3; ++i) fwd.push_back(MultiPoly::variable(4, i) * d0);

  std::vector<MultiPoly> inv;
  for (int i = 1; i <= 3; ++i)
    inv.push_back(narrow4(MultiPoly::variable(kMaxVars, i) * den4));
  inv.push_back(narrow4(b));

  CremonaMap m{make_rational_map(std::move(fwd)), make_rational_map(std::move(inv)), F, 0, 0};
  m.forward_degree = m.forward.degree();
  m.inverse_degree = m.inverse.degree();
  if (!verify_cremona(m, 100, 0x1D5EED))
    throw std::domain_error("composition is not the identity (reducible or degenerate form)");
  return m;
}

bool verify_cremona(const CremonaMap& m, int trials, std::uint64_t seed) {
  Rng rng(seed);
  int done = 0;
  long budget = 20L * std::max(trials, 10);
  while (done < trials) {
    if (budget-- <= 0) throw std::domain_error("too many indeterminacy hits");
    std::vector<Rational> p;
    for (int i = 0; i <= m.forward.source_dim; ++i) p.push_back(rng.rational(100));
    if (all_zero(p)) continue;
    std::vector<Rational> q = eval_map(m.forward, p);
    if (all_zero(q)) continue;
    std::vector<Rational> r = eval_map(m.inverse, q);
    if (all_zero(r)) continue;
    if (!projectively_equal(r, p)) return false;
    ++done;
  }
  return true;
}

ParamSurface apply_to_surface(const CremonaMap& m, const ParamSurface& s) {
  if (s.ambient_dim() != 3)
    throw std::invalid_argument("the map acts on surfaces in P3");
  std::vector<BiForm> imgs;
  bool any = false;
  for (const auto& c : m.forward.components) {
    BiForm img = substitute(c, s.forms());
    if (!img.is_zero()) any = true;
    imgs.push_back(std::move(img));
  }
  if (!any) throw std::domain_error("map contracts the surface");
  ParamSurface out = make_surface(std::move(imgs));
  Rng check(0xB14A70);
  if (!is_birational(out, check))
    throw std::domain_error("image is no longer birational to its parametrization");
  return out;
}

}  // namespace cremona
