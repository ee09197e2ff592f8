#include "angulate/angulation_io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "angulate/error.hpp"

namespace angulate {

nlohmann::json diagonal_to_json(const Diagonal& d) { return nlohmann::json::array({d.a, d.b}); }

Diagonal diagonal_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("a diagonal is a pair of integers [i, j]");
  try {
    return Diagonal(j[0].get<int>(), j[1].get<int>());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json angulation_to_json(const Angulation& angulation) {
  nlohmann::json diagonals = nlohmann::json::array();
  for (const auto& d : angulation.diagonals()) diagonals.push_back(diagonal_to_json(d));
  return {{"n", angulation.n()}, {"m", angulation.m()}, {"diagonals", std::move(diagonals)}};
}

Angulation angulation_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("angulation JSON must be an object");
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    std::vector<Diagonal> diagonals;
    for (const auto& d : j.at("diagonals")) diagonals.push_back(diagonal_from_json(d));
    return Angulation(n, m, std::move(diagonals));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed angulation JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid angulation: ") + e.what());
  }
}

std::pair<double, double> vertex_position(int polygon_size, int v) {
  const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * (v - 1) / polygon_size;
  return {std::cos(angle), -std::sin(angle)};
}

namespace {

std::string fixed(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4f", value);
  std::string out = buffer;
  if (out == "-0.0000") out = "0.0000";
  return out;
}

const char* const kCellFills[] = {"#dbe9f6", "#f6e7d2", "#e0f0d9", "#efdcef"};

}  // namespace

std::string angulation_to_svg(const Angulation& angulation, const SvgOptions& options) {
  const int size = angulation.polygon_size();
  auto point = [&](int v) {
    const auto [x, y] = vertex_position(size, v);
    return fixed(x) + "," + fixed(y);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.25 -1.25 2.5 2.5\" "
         "width=\"400\" height=\"400\">\n";
  if (options.shade_cells) {
    int k = 0;
    for (const auto& cell : cells(angulation)) {
      out << "  <polygon class=\"cell\" fill=\"" << kCellFills[k++ % 4] << "\" points=\"";
      for (std::size_t i = 0; i < cell.vertices.size(); ++i) out << (i ? " " : "") << point(cell.vertices[i]);
      out << "\"/>\n";
    }
  }
  out << "  <polygon class=\"boundary\" fill=\"none\" stroke=\"black\" stroke-width=\"0.01\" points=\"";
  for (int v = 1; v <= size; ++v) out << (v > 1 ? " " : "") << point(v);
  out << "\"/>\n";
  for (const auto& d : angulation.diagonals()) {
    const auto [x1, y1] = vertex_position(size, d.a);
    const auto [x2, y2] = vertex_position(size, d.b);
    out << "  <line class=\"diagonal\" data-diagonal=\"" << d.name() << "\" x1=\"" << fixed(x1)
        << "\" y1=\"" << fixed(y1) << "\" x2=\"" << fixed(x2) << "\" y2=\"" << fixed(y2)
        << "\" stroke=\"#b03030\" stroke-width=\"0.015\"/>\n";
  }
  if (options.label_vertices) {
    for (int v = 1; v <= size; ++v) {
      const auto [x, y] = vertex_position(size, v);
      out << "  <text x=\"" << fixed(1.12 * x) << "\" y=\"" << fixed(1.12 * y + 0.03)
          << "\" font-size=\"0.09\" text-anchor=\"middle\">" << v << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace angulate
