#pragma once

// JSON descriptors for the value types that cross the tool boundary:
// surfaces, monoids, maps and rectification traces. Serialization is
// deterministic: identical values give byte-identical text, so seeded
// reruns can be compared verbatim. Readers throw std::invalid_argument
// on malformed text or on descriptors violating the type invariants.

#include <cstdint>
#include <string>

#include "cremona/maps.hpp"
#include "cremona/monoid.hpp"
#include "cremona/rectify.hpp"
#include "cremona/surface.hpp"

namespace cremona {

// Stamped into every top-level document as "schema".
inline constexpr int kSchemaVersion = 1;

// { "schema", "ambient_dim", "bidegree": [a,b], "forms": [...], "seed" }
std::string surface_to_json(const ParamSurface& s, std::uint64_t seed);

// Accepts documents with or without the schema stamp. The forms are passed
// through make_surface; the descriptor's ambient_dim and bidegree must
// agree with the reduced result. The recorded seed lands in seed_out when
// requested.
ParamSurface surface_from_json(const std::string& text,
                               std::uint64_t* seed_out = nullptr);

// { "schema", "components", "inverse", "monoid", "degree" }
std::string map_to_json(const CremonaMap& m);

// Rebuilds both directions through make_rational_map and the monoid through
// make_monoid; the recorded degree must match the components.
CremonaMap map_from_json(const std::string& text);

// { "schema", "d", "vertexes", "dim", "element", "cone_free" }; dim is the
// projective dimension of the restricted system the element was drawn from,
// -1 when unknown.
std::string monoid_to_json(const Monoid& m, int system_dim, bool cone_free);

Monoid monoid_from_json(const std::string& text);

// The whole run: initial and final surface, one entry per step with the
// stage list (beta, d, the P4 realization, monoid, projection pair, image
// surface), the composed step map when kept, and the logs. Wall-clock data
// stays out; timing goes to the caller's own channel.
std::string trace_to_json(const RectificationTrace& t);

}  // namespace cremona
