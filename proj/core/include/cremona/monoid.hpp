#pragma once

// Linear systems of monoid hypersurfaces in P4: degree-d forms with
// multiplicity at least d-1 at one or both of the coordinate points
// p0 = (1:0:0:0:0), p4 = (0:0:0:0:1), their restriction to parametrized
// surfaces, the cone containment test, and a canonical complement of the
// cone-bearing subspace.

#include <optional>
#include <vector>

#include "cremona/multipoly.hpp"
#include "cremona/rng.hpp"
#include "cremona/surface.hpp"

namespace cremona {

struct MonoidSystem {
  int d = 0;
  std::vector<int> vertexes;            // subset of {0, 4}, ascending
  std::vector<MultiPoly> basis;         // linearly independent 5-variable forms
  std::optional<ParamSurface> through;  // surface every element vanishes on
  int h0_restricted = -1;               // rank of the restriction map, -1 before restriction
  bool cone_free = false;               // true when built as a cone complement

  int dim() const { return static_cast<int>(basis.size()) - 1; }  // projective
};

struct Monoid {
  MultiPoly form;  // homogeneous of degree d, multiplicity exactly d-1 at each vertex
  int d = 0;
  std::vector<int> vertexes;
};

// Validates multiplicity exactly d-1 at every listed vertex.
Monoid make_monoid(MultiPoly form, std::vector<int> vertexes);

// Monomial basis of the degree-d forms whose multiplicity at each requested
// vertex is at least d-1 (vertex variable exponent at most 1). Vertexes may
// be empty for the full degree-d system. Requires d >= 2.
MonoidSystem monoid_basis(int d, std::vector<int> vertexes);

// Projective dimensions of the single- and double-vertex systems:
// d^3/3 + 3d^2/2 + 13d/6 and 2d^2 + 2d.
long dim_formula_Md(int d);
long dim_formula_Mdpq(int d);

// Subsystem of sys vanishing identically on the image of Z, computed as the
// kernel of coefficient substitution. Records the substitution rank in
// h0_restricted, so result.dim() == sys.dim() - h0_restricted exactly.
// Throws when no element of sys passes through Z.
MonoidSystem restrict_to_surface(const MonoidSystem& sys, const ParamSurface& Z);

// Whether the hypersurface {f = 0} contains the cone over Z with vertex at
// the given coordinate point: every piece of the vertex-variable grading of
// f must vanish on Z.
bool contains_cone(const MultiPoly& f, int vertex, const ParamSurface& Z);

// Canonical complement (pivot completion in graded lex order) of the
// subspace of sys whose elements contain the cone over sys.through at the
// given vertex. Every nonzero element of the result is cone free at that
// vertex. Throws when all of sys contains the cone.
MonoidSystem not_cone_complement(const MonoidSystem& sys, int vertex);

// Seeded search for a degree-d element through Z with double vertex p0, p4
// and neither cone contained. Returns nullopt when the restricted system is
// empty or the bounded draws are exhausted.
std::optional<Monoid> find_double_vertex_monoid(const ParamSurface& Z, int d, Rng& rng);

}  // namespace cremona
