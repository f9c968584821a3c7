#pragma once

// Parametrized rationally ruled surfaces: rational maps P1xP1 -> P^n given
// by n+1 bihomogeneous forms of a common bidegree (a, b). The ruling is the
// family of fibers {(u:v) = const}, each mapping to a degree-a rational
// curve; a is the ruling degree and b the section degree.

#include <cremona/biform.hpp>
#include <cremona/rng.hpp>

#include <vector>

namespace cremona {

class ParamSurface {
 public:
  int ambient_dim() const { return static_cast<int>(forms_.size()) - 1; }
  const std::vector<BiForm>& forms() const { return forms_; }
  int ruling_degree() const { return a_; }
  int section_degree() const { return b_; }

 private:
  ParamSurface(std::vector<BiForm> forms, int a, int b)
      : forms_(std::move(forms)), a_(a), b_(b) {}
  std::vector<BiForm> forms_;
  int a_;
  int b_;
  friend ParamSurface make_surface(std::vector<BiForm> forms);
};

// Validates and reduces a raw form list: the nonzero forms must share one
// bidegree; their common BiForm factor is divided out; point and line
// images (coefficient rank <= 2) and maps factoring through one ruling
// (reduced bidegree with a = 0 or b = 0) are rejected.
ParamSurface make_surface(std::vector<BiForm> forms);

// Degree of the image counted with the degree of the parametrizing map:
// 2ab minus the length of the base locus seen by random hyperplane pairs.
// For birational parametrizations this is the image degree. Each of five
// independent draws takes the gcd of three random-pair (s,t)-resultants;
// the fixed part is the base contribution.
int image_degree(const ParamSurface& s, Rng& rng);

// True iff a generic image point has exactly one parameter preimage.
// Counts distinct fiber coordinates in both rulings after saturating away
// the base locus; two distinct preimages must differ in one of them.
bool is_birational(const ParamSurface& s, Rng& rng);

// Exact membership of the i-th coordinate point of the ambient space in
// the image. Decomposes the common zeros of the other forms into the
// divisorial part (a gcd) and finitely many residual points; the latter
// are checked over the number fields cut out by elimination.
bool point_on_image(const ParamSurface& s, int coord_index, Rng& rng);

// image_degree of the surface re-made from all forms except the i-th:
// the projection of the image away from the i-th coordinate point.
int projection_degree(const ParamSurface& s, int coord_index, Rng& rng);

}  // namespace cremona
