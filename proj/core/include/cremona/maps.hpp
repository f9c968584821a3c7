#pragma once

// Rational maps between projective spaces with exact polynomial components,
// and the birational self-maps of P3 obtained by projecting a double-vertex
// monoid hypersurface in P4 from each of its vertexes.

#include <cstdint>
#include <vector>

#include "cremona/monoid.hpp"
#include "cremona/multipoly.hpp"
#include "cremona/surface.hpp"

namespace cremona {

struct RationalMap {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<MultiPoly> components;  // target_dim+1 forms in source_dim+1 variables

  // Common degree of the nonzero components.
  int degree() const;
};

// Validates shape: at least two components of a common number of variables
// and a common degree, not all zero, defined at a sampled rational point.
// Components are expected to carry no common polynomial factor; the monoid
// constructors below certify that before calling.
RationalMap make_rational_map(std::vector<MultiPoly> components);

// Exact evaluation; the result is not normalized and may be the zero vector
// (an indeterminacy point).
std::vector<Rational> eval_map(const RationalMap& m, const std::vector<Rational>& p);

// Substitution of args into every term of f; args.size() == f.nvars().
MultiPoly compose(const MultiPoly& f, const std::vector<MultiPoly>& args);

// Exact projective equality by cross-multiplication; zero vectors compare
// false against everything.
bool projectively_equal(const std::vector<Rational>& p, const std::vector<Rational>& q);

struct CremonaMap {
  RationalMap forward;  // P3 -> P3, source coordinates x1..x4 in slots 0..3
  RationalMap inverse;  // P3 -> P3, source coordinates x0..x3 in slots 0..3
  Monoid source_monoid;
  int forward_degree = 0;
  int inverse_degree = 0;
};

// Inverse of the projection from p0 restricted to {F = 0}: P3 -> P4,
// [x1:x2:x3:x4] -> [-F_d : x1 F_{d-1} : ... : x4 F_{d-1}] where
// F = x0 F_{d-1} + F_d. Substituting the result into F gives the zero
// polynomial. Throws when F_{d-1} = 0 (a cone) or when the two pieces fail
// the coprimality certificate (reducible monoid).
RationalMap monoid_section(const Monoid& F);

// The self-map of P3 given by (projection from p4) o (section at p0), with
// its inverse from the symmetric construction at p4. The composition is
// verified to be the identity at sampled points; failures throw and signal
// a degenerate or reducible monoid, so callers re-draw.
CremonaMap cremona_from_monoid(const Monoid& F);

// Checks inverse(forward(P)) ~ P at `trials` random rational points of
// height about 100, skipping indeterminacy points. Exact arithmetic
// throughout; throws when indeterminacy hits exhaust the attempt budget.
bool verify_cremona(const CremonaMap& m, int trials, std::uint64_t seed);

// Image of a parametrized surface in P3 under the forward map, reduced by
// make_surface. Throws if the map contracts the surface or the image loses
// birationality-onto-image.
ParamSurface apply_to_surface(const CremonaMap& m, const ParamSurface& s);

}  // namespace cremona
