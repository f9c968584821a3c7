#include "cremona/surface.hpp"

#include <algorithm>
#include <stdexcept>

#include "cremona/binary_form.hpp"
#include "cremona/matrix.hpp"
#include "cremona/numberfield.hpp"
#include "upoly.hpp"

namespace cremona {

namespace {

BiForm random_combination(const std::vector<BiForm>& forms, Rng& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    BiForm acc(forms[0].deg_st(), forms[0].deg_uv());
    bool any = false;
    for (const auto& f : forms) {
      long c = rng.integer_in(-9, 9);
      if (c == 0) continue;
      acc = acc + f.scaled(Rational(c));
      any = true;
    }
    if (any && !acc.is_zero()) return acc;
  }
  throw std::domain_error("could not draw a nonzero combination of the system");
}

// Fixed part of the elimination pencil: gcd over three random-pair
// resultants. Roots of the result are the coordinates common to every
// member of the system (base contributions); moving roots cancel in the
// gcd. eliminate_uv selects which ruling is eliminated: true yields a
// binary form in (s,t), false one in (u,v). Returns nullopt when random
// pairs persistently have identically zero resultant (the system does not
// cut a finite set).
std::optional<BinaryForm> fixed_part(const std::vector<BiForm>& forms, bool eliminate_uv,
                                     Rng& rng) {
  std::optional<BinaryForm> acc;
  int used = 0;
  for (int attempt = 0; attempt < 24 && used < 3; ++attempt) {
    BiForm h1 = random_combination(forms, rng);
    BiForm h2 = random_combination(forms, rng);
    BinaryForm r = eliminate_uv ? resultant_uv(h1, h2) : resultant_st(h1, h2);
    if (r.is_zero()) continue;
    acc = acc ? BinaryForm::gcd(*acc, r) : r.normalized();
    ++used;
    if (acc->degree() == 0) return acc;
  }
  if (used < 3) return std::nullopt;
  return acc;
}

// Repeatedly divides out of f every factor shared with d.
BinaryForm saturate(BinaryForm f, const BinaryForm& d) {
  if (f.is_zero() || d.degree() == 0) return f;
  for (;;) {
    BinaryForm g = BinaryForm::gcd(f, d);
    if (g.degree() == 0) return f;
    auto q = f.divide_exact(g);
    if (!q) throw std::logic_error("gcd failed to divide in saturation");
    f = *q;
  }
}

// Evaluates all forms at a random parameter point, retrying off the base
// locus; returns the image point coordinates.
std::vector<Rational> random_image_point(const std::vector<BiForm>& forms, Rng& rng,
                                         std::array<Rational, 4>* param_out = nullptr) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    Rational sv = rng.rational(13), tv = rng.rational(13);
    Rational uv = rng.rational(13), vv = rng.rational(13);
    if ((sv == 0 && tv == 0) || (uv == 0 && vv == 0)) continue;
    std::vector<Rational> p;
    bool any = false;
    for (const auto& f : forms) {
      Rational val = f.is_zero() ? Rational(0) : f.eval(sv, tv, uv, vv);
      if (val != 0) any = true;
      p.push_back(val);
    }
    if (!any) continue;
    if (param_out) *param_out = {sv, tv, uv, vv};
    return p;
  }
  throw std::domain_error("could not find a parameter point off the base locus");
}

// The h(w, 1, u, v) restriction as a binary form in (u, v) over Q[w]/(mod).
KBinary restrict_over_field(const NumberField& K, const BiForm& h) {
  KBinary r;
  r.c.assign(static_cast<std::size_t>(h.deg_uv()) + 1, NumberField::Elem{});
  for (int j = 0; j <= h.deg_uv(); ++j) {
    std::vector<Rational> p;
    for (int i = 0; i <= h.deg_st(); ++i) p.push_back(h.at(i, j));
    r.c[static_cast<std::size_t>(j)] = K.reduce(std::move(p));
  }
  return r;
}

}  // namespace

ParamSurface make_surface(std::vector<BiForm> forms) {
  if (forms.size() != 4 && forms.size() != 5)
    throw std::invalid_argument("a surface realization needs 4 or 5 forms");
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (!forms[i].is_zero()) nz.push_back(i);
  if (nz.empty()) throw std::invalid_argument("all forms are zero");
  int a = forms[nz[0]].deg_st(), b = forms[nz[0]].deg_uv();
  for (auto i : nz)
    if (forms[i].deg_st() != a || forms[i].deg_uv() != b)
      throw std::invalid_argument("forms have mixed bidegrees");

  BiForm g = forms[nz[0]];
  for (std::size_t k = 1; k < nz.size(); ++k) g = BiForm::gcd(g, forms[nz[k]]);
  if (g.deg_st() + g.deg_uv() > 0) {
    for (auto i : nz) {
      auto q = forms[i].divide_exact(g);
      if (!q) throw std::logic_error("common factor does not divide a form");
      forms[i] = *q;
    }
    a -= g.deg_st();
    b -= g.deg_uv();
  }
  for (auto& f : forms)
    if (f.is_zero()) f = BiForm(a, b);

  if (a == 0 || b == 0)
    throw std::invalid_argument("map factors through one ruling: image is a point or curve");

  QMat coeffs(static_cast<int>(forms.size()), (a + 1) * (b + 1));
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j)
        coeffs.at(static_cast<int>(r), i * (b + 1) + j) = forms[r].at(i, j);
  if (coeffs.rank() <= 2)
    throw std::invalid_argument("forms span a pencil: image is a point or a line");

  Rng probe(0x5EEDED);
  random_image_point(forms, probe);  // throws when undefined everywhere sampled

  return ParamSurface(std::move(forms), a, b);
}

int image_degree(const ParamSurface& s, Rng& rng) {
  long full = 2L * s.ruling_degree() * s.section_degree();
  int best = -1;
  for (int draw = 0; draw < 5; ++draw) {
    auto fp = fixed_part(s.forms(), /*eliminate_uv=*/false, rng);
    if (!fp) throw std::domain_error("map not generically finite");
    int candidate = static_cast<int>(full) - fp->degree();
    best = std::max(best, candidate);
  }
  return best;
}

bool is_birational(const ParamSurface& s, Rng& rng) {
  auto d_st = fixed_part(s.forms(), /*eliminate_uv=*/true, rng);
  auto d_uv = fixed_part(s.forms(), /*eliminate_uv=*/false, rng);
  if (!d_st || !d_uv) return false;

  int best = -1;
  int clean = 0;
  for (int trial = 0; trial < 8 && clean < 3; ++trial) {
    std::vector<Rational> p = random_image_point(s.forms(), rng);
    std::size_t j0 = 0;
    while (p[j0] == 0) ++j0;
    std::vector<BiForm> minors;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i == j0) continue;
      BiForm m = s.forms()[i].scaled(p[j0]) - s.forms()[j0].scaled(p[i]);
      if (!m.is_zero()) minors.push_back(std::move(m));
    }
    if (minors.size() < 2) return false;
    auto e_st = fixed_part(minors, true, rng);
    auto e_uv = fixed_part(minors, false, rng);
    if (!e_st || !e_uv) continue;
    BinaryForm f_st = saturate(*e_st, *d_st);
    BinaryForm f_uv = saturate(*e_uv, *d_uv);
    if (f_st.degree() == 0 || f_uv.degree() == 0) continue;  // fiber hid in the base locus
    // A generic fiber is reduced; a repeated root means the draw landed on
    // the branch locus, where a multiple cover can collapse to one point.
    if (!f_st.is_squarefree() || !f_uv.is_squarefree()) continue;
    int count = std::max(f_st.distinct_root_count(), f_uv.distinct_root_count());
    best = best < 0 ? count : std::min(best, count);
    ++clean;
    if (best == 1) return true;
  }
  return best == 1;
}

bool point_on_image(const ParamSurface& s, int coord_index, Rng& rng) {
  const auto& forms = s.forms();
  if (coord_index < 0 || coord_index > s.ambient_dim())
    throw std::invalid_argument("coordinate index out of range");
  const BiForm& fj = forms[static_cast<std::size_t>(coord_index)];
  if (fj.is_zero()) return false;  // image lies in the coordinate hyperplane

  std::vector<BiForm> others;
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (static_cast<int>(i) != coord_index && !forms[i].is_zero()) others.push_back(forms[i]);
  if (others.empty()) return true;

  // Divisorial part: where the gcd of the other forms vanishes, they all
  // do; the point is hit iff fj survives somewhere on that divisor, i.e.
  // iff the squarefree part of the gcd fails to divide fj.
  BiForm g = others[0];
  for (std::size_t k = 1; k < others.size(); ++k) g = BiForm::gcd(g, others[k]);
  std::vector<BiForm> hs;
  if (g.deg_st() + g.deg_uv() > 0) {
    if (!fj.divide_exact(g.squarefree_part()).has_value()) return true;
    for (const auto& o : others) {
      auto q = o.divide_exact(g);
      if (!q) throw std::logic_error("gcd does not divide one of the forms");
      hs.push_back(*q);
    }
  } else {
    hs = others;
  }

  int ah = hs[0].deg_st(), bh = hs[0].deg_uv();
  if (ah == 0 && bh == 0) return false;  // residual system is a nonzero constant
  if (hs.size() < 2) return false;
  // Residual forms in a single ruling are coprime (their gcd was divided
  // out), so they have no common zeros at all.
  if (ah == 0 || bh == 0) return false;

  // Candidates on the line t = 0.
  {
    std::vector<BinaryForm> restr;
    for (const auto& h : hs) {
      BinaryForm r = h.restrict_section(Rational(1), Rational(0));
      if (!r.is_zero()) restr.push_back(std::move(r));
    }
    if (restr.empty()) throw std::logic_error("residual forms all vanish on a line");
    BinaryForm ginf = restr[0];
    for (std::size_t k = 1; k < restr.size() && ginf.degree() > 0; ++k)
      ginf = BinaryForm::gcd(ginf, restr[k]);
    if (ginf.degree() >= 1) {
      BinaryForm fj_inf = fj.restrict_section(Rational(1), Rational(0));
      if (!fj_inf.is_zero() && !fj_inf.divide_exact(ginf.squarefree_part()).has_value())
        return true;
    }
  }

  // Affine chart t = 1: eliminate (u, v) to a binary form in (s, t) whose
  // fixed part carries the s-coordinates of all residual common zeros.
  auto elim = fixed_part(hs, /*eliminate_uv=*/true, rng);
  if (!elim) throw std::domain_error("residual elimination degenerated");
  BinaryForm esf = elim->squarefree_part();
  upoly::UPoly q0;
  for (int i = 0; i <= esf.degree(); ++i) q0.push_back(esf.coeff(i));
  upoly::utrim(q0);
  if (upoly::udeg(q0) < 1) return false;

  std::vector<upoly::UPoly> work{upoly::umonic(std::move(q0))};
  while (!work.empty()) {
    upoly::UPoly mod = std::move(work.back());
    work.pop_back();
    if (upoly::udeg(mod) < 1) continue;
    try {
      NumberField K(mod);
      std::vector<KBinary> hk;
      for (const auto& h : hs) {
        KBinary r = restrict_over_field(K, h);
        if (!kb_is_zero(r)) hk.push_back(std::move(r));
      }
      if (hk.empty()) throw std::logic_error("all residual forms vanish over a branch");
      KBinary gk = hk[0];
      for (std::size_t k = 1; k < hk.size() && gk.degree() > 0; ++k) gk = kb_gcd(K, gk, hk[k]);
      if (gk.degree() == 0) continue;  // no common (u:v) root over this branch
      KBinary gsf = kb_squarefree(K, gk);
      KBinary fjk = restrict_over_field(K, fj);
      if (kb_is_zero(fjk)) continue;  // fj vanishes on the whole branch fiber
      if (!kb_divides(K, gsf, fjk)) return true;
    } catch (ModulusSplit& split) {
      upoly::UPoly f1 = std::move(split.factor);
      upoly::UPoly f2 = upoly::udiv_exact(mod, f1);
      work.push_back(std::move(f1));
      work.push_back(std::move(f2));
    }
  }
  return false;
}

int projection_degree(const ParamSurface& s, int coord_index, Rng& rng) {
  if (s.ambient_dim() != 4)
    throw std::invalid_argument("projection degree expects a surface in P4");
  if (coord_index < 0 || coord_index > 4)
    throw std::invalid_argument("coordinate index out of range");
  std::vector<BiForm> rest;
  for (std::size_t i = 0; i < s.forms().size(); ++i)
    if (static_cast<int>(i) != coord_index) rest.push_back(s.forms()[i]);
  ParamSurface proj = make_surface(std::move(rest));
  return image_degree(proj, rng);
}

}  // namespace cremona
