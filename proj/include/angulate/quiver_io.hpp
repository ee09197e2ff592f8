#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "angulate/coloured_quiver.hpp"

namespace angulate {

/// {"m": int, "vertices": [id...], "arrows": [{"from","to","colour","mult"}...]}
/// with every arrow bundle listed (both skew partners). Integer-spelled ids
/// are written as JSON numbers, everything else as strings.
nlohmann::json quiver_to_json(const ColouredQuiver& q);

/// Parses the quiver file format. Arrows are taken verbatim, so an input
/// violating the axioms is returned as-is for validate() to report.
ColouredQuiver quiver_from_json(const nlohmann::json& j);

/// One directed edge per arrow bundle, labelled "(c)" (or "(c) xN").
std::string quiver_to_dot(const ColouredQuiver& q, const std::string& name = "Q");

nlohmann::json vertex_to_json(const VertexId& id);
VertexId vertex_from_json(const nlohmann::json& j);

}  // namespace angulate
