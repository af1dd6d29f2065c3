#ifndef ANGULATION_JSON_IO_HPP
#define ANGULATION_JSON_IO_HPP

#include <json.hpp>

#include "angulation/angulator.hpp"
#include "angulation/formulas.hpp"
#include "angulation/oracle.hpp"
#include "angulation/plane_graph.hpp"

namespace angulation {

/// Point sets travel as {"points": [[x, y], ...]}; file order is identity.
PointSet point_set_from_json(const nlohmann::json& j);
nlohmann::json point_set_to_json(const PointSet& ps);

/// Graphs travel as {"n", "edges", "coordinates"?, "outer_face"?, "faces"?}.
/// Readers rebuild geometrically when coordinates are present, otherwise from
/// the face walks (which carry the rotation system).
nlohmann::json graph_to_json(const PlaneGraph& g);
PlaneGraph graph_from_json(const nlohmann::json& j);

nlohmann::json hull_to_json(const Hull& hull);
nlohmann::json params_to_json(const AngulationParams& params);
nlohmann::json feasibility_to_json(const FeasibilityReport& report);
nlohmann::json recognition_to_json(const RecognitionReport& report);
nlohmann::json extremal_to_json(const ExtremalReport& report);

} // namespace angulation

#endif
