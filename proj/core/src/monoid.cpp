#include "cremona/monoid.hpp"

#include <algorithm>
#include <stdexcept>

#include "cremona/biform.hpp"
#include "cremona/matrix.hpp"

namespace cremona {

namespace {

void check_vertexes(const std::vector<int>& vertexes) {
  for (int v : vertexes)
    if (v != 0 && v != 4) throw std::invalid_argument("vertexes must be p0 or p4");
  for (std::size_t i = 1; i < vertexes.size(); ++i)
    if (vertexes[i] <= vertexes[i - 1])
      throw std::invalid_argument("vertexes must be strictly ascending");
}

bool has_vertex(const std::vector<int>& vertexes, int v) {
  return std::find(vertexes.begin(), vertexes.end(), v) != vertexes.end();
}

void enumerate_monomials(int d, const std::vector<int>& vertexes, int slot, Expo& e,
                         std::vector<Expo>& out) {
  if (slot == kMaxVars - 1) {
    if (has_vertex(vertexes, slot) && d > 1) return;
    e[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(d);
    out.push_back(e);
    return;
  }
  int cap = has_vertex(vertexes, slot) ? std::min(d, 1) : d;
  for (int k = 0; k <= cap; ++k) {
    e[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(k);
    enumerate_monomials(d - k, vertexes, slot + 1, e, out);
  }
  e[static_cast<std::size_t>(slot)] = 0;
}

// Coefficient matrix of the substitution map: column k is the BiForm image
// of basis[k] on Z, flattened over the (d*a+1) x (d*b+1) coefficient grid.
QMat substitution_matrix(const std::vector<MultiPoly>& basis, const ParamSurface& Z, int d) {
  int ra = d * Z.ruling_degree(), rb = d * Z.section_degree();
  std::size_t rows = static_cast<std::size_t>(ra + 1) * static_cast<std::size_t>(rb + 1);
  QMat m(rows, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    BiForm img = substitute(basis[k], Z.forms());
    for (int i = 0; i <= ra; ++i)
      for (int j = 0; j <= rb; ++j)
        m.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(rb + 1) +
                 static_cast<std::size_t>(j),
             k) = img.at(i, j);
  }
  return m;
}

MultiPoly combine(const std::vector<MultiPoly>& basis, const std::vector<Rational>& coeffs) {
  MultiPoly acc(kMaxVars);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coeffs[k] != 0) acc = acc + basis[k].scaled(coeffs[k]);
  return acc;
}

std::optional<MonoidSystem> try_restrict(const MonoidSystem& sys, const ParamSurface& Z) {
  if (Z.ambient_dim() != 4)
    throw std::invalid_argument("restriction expects a surface in P4");
  if (sys.basis.empty()) return std::nullopt;
  QMat m = substitution_matrix(sys.basis, Z, sys.d);
  // Full modular column rank certifies an empty kernel without exact work.
  if (m.rank_mod() == sys.basis.size()) return std::nullopt;
  std::vector<std::vector<Rational>> ker = m.kernel();
  if (ker.empty()) return std::nullopt;

  MonoidSystem out;
  out.d = sys.d;
  out.vertexes = sys.vertexes;
  out.through = Z;
  out.h0_restricted = static_cast<int>(sys.basis.size() - ker.size());
  for (const auto& v : ker) out.basis.push_back(combine(sys.basis, v));
  return out;
}

// Pivot columns of the row space, eliminating in graded lex column order.
std::vector<std::size_t> pivot_columns(std::vector<std::vector<Rational>> rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Monoid make_monoid(MultiPoly form, std::vector<int> vertexes) {
  check_vertexes(vertexes);
  if (form.is_zero()) throw std::invalid_argument("monoid form is zero");
  int d = form.degree();
  if (d < 2) throw std::invalid_argument("monoid degree must be at least 2");
  for (int v : vertexes)
    if (form.mult_at_coord_point(v) != d - 1)
      throw std::invalid_argument("multiplicity at a vertex is not d-1");
  return Monoid{std::move(form), d, std::move(vertexes)};
}

MonoidSystem monoid_basis(int d, std::vector<int> vertexes) {
  if (d < 2) throw std::invalid_argument("monoid systems start at degree 2");
  check_vertexes(vertexes);
  std::vector<Expo> expos;
  Expo e{};
  enumerate_monomials(d, vertexes, 0, e, expos);
  std::sort(expos.begin(), expos.end(), GrlexGreater{});

  MonoidSystem sys;
  sys.d = d;
  sys.vertexes = std::move(vertexes);
  for (const auto& ex : expos)
    sys.basis.push_back(MultiPoly::monomial(kMaxVars, ex, Rational(1)));
  return sys;
}

long dim_formula_Md(int d) {
  if (d < 2) throw std::invalid_argument("formula needs d >= 2");
  Rational r = Rational(static_cast<long>(d) * d * d, 3) +
               Rational(3L * d * d, 2) + Rational(13L * d, 6);
  if (r.get_den() != 1 || r < 0) throw std::logic_error("dimension formula not integral");
  return r.get_num().get_si();
}

long dim_formula_Mdpq(int d) {
  if (d < 2) throw std::invalid_argument("formula needs d >= 2");
  return 2L * d * d + 2L * d;
}

MonoidSystem restrict_to_surface(const MonoidSystem& sys, const ParamSurface& Z) {
  auto r = try_restrict(sys, Z);
  if (!r) throw std::domain_error("no element of the system passes through the surface");
  return *r;
}

bool contains_cone(const MultiPoly& f, int vertex, const ParamSurface& Z) {
  if (vertex != 0 && vertex != 4) throw std::invalid_argument("vertex must be p0 or p4");
  if (Z.ambient_dim() != 4) throw std::invalid_argument("cone test expects a surface in P4");
  if (f.is_zero()) return true;
  for (int k = 0; k <= f.max_power(vertex); ++k) {
    MultiPoly piece = f.graded_piece(vertex, k);
    if (piece.is_zero()) continue;
    if (!substitute(piece, Z.forms()).is_zero()) return false;
  }
  return true;
}

MonoidSystem not_cone_complement(const MonoidSystem& sys, int vertex) {
  if (!sys.through) throw std::invalid_argument("system does not record a surface");
  if (vertex != 0 && vertex != 4) throw std::invalid_argument("vertex must be p0 or p4");
  const ParamSurface& Z = *sys.through;
  std::size_t n = sys.basis.size();
  if (n == 0) throw std::domain_error("empty system");

  // Linear conditions for containing the cone: each vertex-graded piece of
  // a combination must vanish on Z. Stack one block of coefficient rows per
  // vertex power.
  int maxk = 0;
  for (const auto& b : sys.basis) maxk = std::max(maxk, b.max_power(vertex));
  std::vector<QMat> blocks;
  std::size_t total_rows = 0;
  for (int k = 0; k <= maxk; ++k) {
    int ra = (sys.d - k) * Z.ruling_degree(), rb = (sys.d - k) * Z.section_degree();
    std::size_t rows = static_cast<std::size_t>(ra + 1) * static_cast<std::size_t>(rb + 1);
    QMat blk(rows, n);
    for (std::size_t c = 0; c < n; ++c) {
      MultiPoly piece = sys.basis[c].graded_piece(vertex, k);
      if (piece.is_zero()) continue;
      BiForm img = substitute(piece, Z.forms());
      for (int i = 0; i <= ra; ++i)
        for (int j = 0; j <= rb; ++j)
          blk.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(rb + 1) +
                     static_cast<std::size_t>(j),
                 c) = img.at(i, j);
    }
    total_rows += rows;
    blocks.push_back(std::move(blk));
  }
  QMat cond(total_rows, n);
  std::size_t off = 0;
  for (const auto& blk : blocks) {
    for (std::size_t r = 0; r < blk.rows(); ++r)
      for (std::size_t c = 0; c < n; ++c) cond.at(off + r, c) = blk.at(r, c);
    off += blk.rows();
  }

  std::vector<std::vector<Rational>> cone = cond.kernel();
  if (cone.size() == n) throw std::domain_error("every element contains the cone");

  std::vector<std::size_t> pivots = pivot_columns(cone);
  MonoidSystem out;
  out.d = sys.d;
  out.vertexes = sys.vertexes;
  out.through = sys.through;
  out.h0_restricted = sys.h0_restricted;
  out.cone_free = true;
  for (std::size_t c = 0; c < n; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
      out.basis.push_back(sys.basis[c]);
  if (out.basis.empty()) throw std::domain_error("every element contains the cone");
  return out;
}

std::optional<Monoid> find_double_vertex_monoid(const ParamSurface& Z, int d, Rng& rng) {
  if (d < 2) throw std::invalid_argument("monoid degree must be at least 2");
  MonoidSystem sys = monoid_basis(d, {0, 4});
  auto restricted = try_restrict(sys, Z);
  if (!restricted) return std::nullopt;

  for (int attempt = 0; attempt < 24; ++attempt) {
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < restricted->basis.size(); ++k)
      coeffs.push_back(Rational(rng.integer_in(-9, 9)));
    MultiPoly f = combine(restricted->basis, coeffs);
    if (f.is_zero() || f.degree() != d) continue;
    if (contains_cone(f, 0, Z) || contains_cone(f, 4, Z)) continue;
    return make_monoid(std::move(f), {0, 4});
  }
  return std::nullopt;
}

}  // namespace cremona
