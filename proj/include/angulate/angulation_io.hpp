#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "angulate/angulation.hpp"

namespace angulate {

/// {"n": int, "m": int, "diagonals": [[i, j], ...]}
nlohmann::json angulation_to_json(const Angulation& angulation);
/// Throws ParseError for malformed JSON or an invalid angulation.
Angulation angulation_from_json(const nlohmann::json& j);

nlohmann::json diagonal_to_json(const Diagonal& d);
Diagonal diagonal_from_json(const nlohmann::json& j);

struct SvgOptions {
  bool shade_cells = false;
  bool label_vertices = true;
};

/// Polygon on the unit circle, vertex 1 at the top and the rest clockwise,
/// with every diagonal drawn as a chord. Coordinates are printed with four
/// decimals, so equal inputs give byte-identical output.
std::string angulation_to_svg(const Angulation& angulation, const SvgOptions& options = {});

/// Position of polygon vertex v (1-based) in SVG coordinates (y down).
std::pair<double, double> vertex_position(int polygon_size, int v);

}  // namespace angulate
