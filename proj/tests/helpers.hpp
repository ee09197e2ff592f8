#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "angulate/coloured_quiver.hpp"

namespace testing_helpers {

struct A {
  int from;
  int to;
  int colour;
};

// Quiver on vertices 1..size; each listed arrow is added with its skew partner.
inline angulate::ColouredQuiver quiver(int m, int size, const std::vector<A>& arrows) {
  std::vector<angulate::VertexId> ids;
  for (int v = 1; v <= size; ++v) ids.emplace_back(v);
  angulate::ColouredQuiver q(m, ids);
  for (const auto& a : arrows) q.add_arrow_pair(angulate::VertexId(a.from), angulate::VertexId(a.to), a.colour);
  return q;
}

}  // namespace testing_helpers
