#include "angulate/quiver_io.hpp"

#include <sstream>

#include "angulate/error.hpp"

namespace angulate {

nlohmann::json vertex_to_json(const VertexId& id) {
  if (auto value = id.as_integer()) return *value;
  return id.str();
}

VertexId vertex_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return VertexId(std::to_string(j.get<long long>()));
  if (j.is_string()) return VertexId(j.get<std::string>());
  throw ParseError("vertex id must be an integer or a string");
}

nlohmann::json quiver_to_json(const ColouredQuiver& q) {
  nlohmann::json out;
  out["m"] = q.m();
  out["vertices"] = nlohmann::json::array();
  for (const auto& v : q.vertices()) out["vertices"].push_back(vertex_to_json(v));
  out["arrows"] = nlohmann::json::array();
  for (const auto& a : q.arrows()) {
    out["arrows"].push_back({{"from", vertex_to_json(a.from)},
                             {"to", vertex_to_json(a.to)},
                             {"colour", a.colour},
                             {"mult", a.mult}});
  }
  return out;
}

ColouredQuiver quiver_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("quiver JSON must be an object");
    const int m = j.at("m").get<int>();
    std::vector<VertexId> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(vertex_from_json(v));
    ColouredQuiver q(m, std::move(vertices));
    if (j.contains("arrows")) {
      for (const auto& a : j.at("arrows")) {
        const auto from = q.index_of(vertex_from_json(a.at("from")));
        const auto to = q.index_of(vertex_from_json(a.at("to")));
        const int colour = a.at("colour").get<int>();
        const int mult = a.contains("mult") ? a.at("mult").get<int>() : 1;
        if (colour < 0 || colour > m) throw ParseError("arrow colour out of range 0..m");
        if (mult < 1) throw ParseError("arrow multiplicity must be >= 1");
        q.add_arrows(from, to, colour, mult);
      }
    }
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed quiver JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed quiver JSON: ") + e.what());
  }
}

std::string quiver_to_dot(const ColouredQuiver& q, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  for (const auto& v : q.vertices()) out << "  \"" << v.str() << "\";\n";
  for (const auto& a : q.arrows()) {
    out << "  \"" << a.from.str() << "\" -> \"" << a.to.str() << "\" [label=\"(" << a.colour
        << ")";
    if (a.mult > 1) out << " x" << a.mult;
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace angulate
