#pragma once

// The degree-lowering pipeline: re-embed the surface in P4, find a double
// vertex monoid through the image, project from both vertexes, and repeat
// until the fibers map to lines. One step lowers the fiber degree by one;
// it consumes the four coordinate forms through consecutive projections
// sharing one section Gamma, which becomes a common factor at the end and
// is stripped. A step may finish after a single projection when the factor
// already appears there.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/lambda.hpp"
#include "cremona/maps.hpp"
#include "cremona/monoid.hpp"
#include "cremona/rng.hpp"
#include "cremona/surface.hpp"

namespace cremona {

struct RectifyConfig {
  std::uint64_t seed = 1;
  int beta_max = 4;  // appended-fiber counts searched per stage, ascending
  int d_max = 8;     // monoid degrees searched per fiber count, ascending
  bool four_projection = true;  // consume all four coordinates when one
                                // projection does not free the section
  int step_retries = 6;         // whole-step redraws on degenerate randomness
  int consistency_points = 20;  // endpoint agreement sample size
  int verify_trials = 100;      // identity checks per produced map
  int lambda_height = 20;       // coefficient height of embedding draws
  // Called after each completed step with its wall time. Reporting only;
  // the trace itself carries no clock data, so reruns stay comparable.
  std::function<void(const struct StepRecord&, double)> step_observer;
};

// One projection pair. map.forward carries points of the surface the stage
// started from to the surface recorded in `after`.
struct StageRecord {
  int beta = 0;
  int d = 0;
  LambdaRealization lambda;
  Monoid monoid;
  CremonaMap map;
  ParamSurface after;
};

struct StepRecord {
  std::vector<StageRecord> stages;  // one when the shortcut fired, else four
  bool shortcut_succeeded = false;
  // Stage maps composed symbolically, kept while the unreduced degree stays
  // affordable; the stage chain is authoritative either way.
  std::optional<CremonaMap> map;
  ParamSurface result;
  std::string log;
};

struct RectificationTrace {
  ParamSurface initial;  // the surface the steps started from
  std::vector<StepRecord> steps;
  ParamSurface final_surface;  // ruling degree 1
  std::uint64_t seed = 0;
  std::string log;
};

// The monoid search ran the whole (beta, d) grid without finding an element.
// Enlarging the bounds may help; redrawing with the same bounds will not,
// because the restricted system's dimension does not depend on the draws.
class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& message, std::string log)
      : std::runtime_error(message), log_(std::move(log)) {}
  const std::string& log() const noexcept { return log_; }

 private:
  std::string log_;
};

// Change of coordinates putting the first coordinate point off the image,
// trying the identity first. Requires a birational realization of an image
// of degree at least 2.
ParamSurface normalize_position(const ParamSurface& s, Rng& rng);

// One full degree-lowering step on a surface of ruling degree a >= 2 with
// the first coordinate point off the image. The result has ruling degree
// exactly a-1. Throws SearchExhausted when some stage's (beta, d) grid has
// no monoid, and runtime_error when retries keep failing for other reasons.
StepRecord rectify_step(const ParamSurface& s, const RectifyConfig& config,
                        Rng& rng);

// Iterates rectify_step down to a scroll and checks the endpoint: chasing
// random parameter points of the initial surface through all stage maps
// lands on the final surface's parametrization, exactly and projectively.
RectificationTrace rectify(const ParamSurface& s, const RectifyConfig& config);

}  // namespace cremona
