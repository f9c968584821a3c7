#include "cremona/lambda.hpp"

#include <stdexcept>
#include <string>

namespace cremona {

namespace {

BiForm random_biform(int a, int b, int height, Rng& rng) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    BiForm f(a, b);
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) f.set(i, j, rng.rational(height));
    if (!f.is_zero()) return f;
  }
  throw std::runtime_error("random draws keep producing the zero form");
}

bool proportional_fibers(const BiForm& f, const BiForm& g) {
  return f.at(0, 0) * g.at(0, 1) - f.at(0, 1) * g.at(0, 0) == Rational(0);
}

// Transversality of the base locus, fiber by fiber. At a base point P the
// gradients of the Li·Π rows are the multiples Li(P)·∇Π of one vector, and
// ∇Π has only (u,v) components while the (s,t) part of ∇(ΓM) restricts to
// the derivative of h = (ΓM)|fiber. The Jacobian has rank 2 at every base
// point exactly when the fibers are pairwise distinct, each h is nonzero
// and squarefree, and no root of h kills all four Li at once.
bool transverse_base_locus(const std::vector<BiForm>& base_forms,
                           const BiForm& gamma, const BiForm& m,
                           const std::vector<BiForm>& fibers) {
  for (std::size_t i = 0; i < fibers.size(); ++i)
    for (std::size_t j = i + 1; j < fibers.size(); ++j)
      if (proportional_fibers(fibers[i], fibers[j])) return false;

  const BiForm gm = gamma * m;
  for (const BiForm& fib : fibers) {
    const Rational u0 = fib.at(0, 1), v0 = -fib.at(0, 0);
    BinaryForm h = gm.restrict_fiber(u0, v0);
    if (h.is_zero() || !h.is_squarefree()) return false;
    BinaryForm common;
    for (const BiForm& l : base_forms) {
      BinaryForm r = l.restrict_fiber(u0, v0);
      common = common.is_zero() ? r : BinaryForm::gcd(common, r);
    }
    if (common.is_zero()) return false;
    if (BinaryForm::gcd(h, common).degree() > 0) return false;
  }
  return true;
}

}  // namespace

LambdaRealization build_lambda_M(const ParamSurface& s, int beta, Rng& rng) {
  return build_lambda_M(s, beta, rng, LambdaOptions{});
}

LambdaRealization build_lambda_M(const ParamSurface& s, int beta, Rng& rng,
                                 const LambdaOptions& options) {
  if (s.ambient_dim() != 3)
    throw std::invalid_argument("the surface to re-embed must live in P3");
  if (beta < 1) throw std::invalid_argument("at least one fiber must be appended");
  const int a = s.ruling_degree(), b = s.section_degree();
  if (a < 2) throw std::invalid_argument("ruling degree 1: already a scroll");
  if (options.gamma &&
      (options.gamma->deg_st() != 1 || options.gamma->deg_uv() != 1 ||
       options.gamma->is_zero()))
    throw std::invalid_argument("a fixed section must be a nonzero (1,1) form");

  Rng draws = rng.fork("lambda", static_cast<std::uint64_t>(beta));
  const int rounds = options.gamma ? 1 : options.section_redraws;
  for (int round = 0; round < rounds; ++round) {
    Rng section_rng = draws.fork("section", static_cast<std::uint64_t>(round));
    const BiForm gamma = options.gamma
                             ? *options.gamma
                             : random_biform(1, 1, options.height, section_rng);

    for (int attempt = 0; attempt < options.retries; ++attempt) {
      Rng try_rng = draws.fork(
          "try", static_cast<std::uint64_t>(round) * 1000 +
                     static_cast<std::uint64_t>(attempt));
      const BiForm m =
          random_biform(a - 1, b + beta - 1, options.height, try_rng);
      std::vector<BiForm> fibers;
      for (int k = 0; k < beta; ++k)
        fibers.push_back(random_biform(0, 1, options.height, try_rng));

      if (!transverse_base_locus(s.forms(), gamma, m, fibers)) continue;

      BiForm pi = fibers[0];
      for (int k = 1; k < beta; ++k) pi = pi * fibers[k];
      std::vector<BiForm> raw;
      for (const BiForm& l : s.forms()) raw.push_back(l * pi);
      raw.push_back(gamma * m);

      try {
        ParamSurface result = make_surface(raw);
        if (result.forms() != raw) continue;  // a common factor was stripped

        if (options.certify) {
          Rng cert = try_rng.fork("certify");
          if (image_degree(result, cert) != a * (2 * b + beta)) continue;
          bool membership_ok = true;
          for (int i = 0; i < 4 && membership_ok; ++i)
            if (point_on_image(result, i, cert)) membership_ok = false;
          if (!membership_ok || !point_on_image(result, 4, cert)) continue;
          if (!is_birational(result, cert)) continue;
        }

        return LambdaRealization{s, beta, gamma, m, std::move(fibers),
                                 std::move(result)};
      } catch (const std::invalid_argument&) {
        continue;  // degenerate form list
      } catch (const std::domain_error&) {
        continue;  // oracle hit an indeterminacy it could not route around
      }
    }
  }
  throw std::runtime_error(
      "no transverse fiber configuration found in " +
      std::to_string(rounds * options.retries) + " draws");
}

}  // namespace cremona
