#pragma once

// The re-embedding step: a ruled surface S ⊂ P3 realized by bidegree (a,b)
// forms L0..L3 is lifted to P4 by the system
//   { L0·Π, L1·Π, L2·Π, L3·Π, Γ·M }
// where Π is a product of β distinct fibers (bidegree (0,β)), Γ is a random
// (1,1) section and M a random form of bidegree (a-1, b+β-1). Projecting the
// image back from p4 recovers S; projecting from p0 lowers the fiber degree
// once a suitable monoid through the image exists.

#include <vector>

#include "cremona/biform.hpp"
#include "cremona/rng.hpp"
#include "cremona/surface.hpp"

namespace cremona {

struct LambdaRealization {
  ParamSurface base;           // the input S, ambient dimension 3
  int beta = 0;                // number of appended fibers
  BiForm gamma;                // bidegree (1,1)
  BiForm m_form;               // bidegree (a-1, b+beta-1)
  std::vector<BiForm> fibers;  // beta pairwise distinct bidegree (0,1) forms
  ParamSurface result;         // image realization in P4
};

struct LambdaOptions {
  int height = 20;              // coefficient height of random draws
  int retries = 24;             // redraws of M and the fibers per section
  int section_redraws = 4;      // fresh Γ draws before giving up
  bool certify = true;          // verify degree, vertex membership, birationality
  const BiForm* gamma = nullptr;  // fixed section; drawn at random when null
};

// Draws Γ, M and the fibers until the base locus of the five forms is
// reduced of length a·beta with every point a transverse intersection.
// The forms of the result are exactly the five stated products; a common
// factor would have been stripped by make_surface and is retried away.
// With certify set, additionally checks image_degree == a(2b+beta),
// p0..p3 off the image, p4 on it, and birationality.
// Requires ambient dimension 3, ruling degree >= 2 and beta >= 1.
LambdaRealization build_lambda_M(const ParamSurface& s, int beta, Rng& rng);
LambdaRealization build_lambda_M(const ParamSurface& s, int beta, Rng& rng,
                                 const LambdaOptions& options);

}  // namespace cremona
