#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "polysemi/newton.hpp"
#include "polysemi/semimodule.hpp"
#include "polysemi/syzygy.hpp"

namespace polysemi {

// insertion-ordered JSON keeps the emitted key order stable across runs
using Json = nlohmann::ordered_json;

Json polytope_to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j, std::optional<int> default_dim = std::nullopt);

Json semimodule_to_json(const SubSemimodule& m);
SubSemimodule semimodule_from_json(const Json& j);

Json ideal_to_json(const GradedIdeal& ideal);
GradedIdeal ideal_from_json(const Json& j);

Json syzygy_to_json(const SyzygyRecord& rec);

Json series_to_json(const NewtonHilbertSeries& s);

/// "zero", "point(1,2)" or "hull((0,0),(1,0))"; the dimension comes from the
/// tuples unless the text is "zero", which needs the fallback.
LatticePolytope parse_polytope_text(const std::string& text,
                                    std::optional<int> default_dim = std::nullopt);

/// Wavefront OBJ for 2- and 3-dimensional ambient spaces.
std::string to_obj(const LatticePolytope& p);

}  // namespace polysemi
