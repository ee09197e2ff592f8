#include "angulate/angulation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "angulate/error.hpp"

namespace angulate {

Diagonal::Diagonal(int i, int j) : a(std::min(i, j)), b(std::max(i, j)) {
  if (i == j) throw InvalidArgument("a diagonal needs two distinct endpoints");
}

std::string Diagonal::name() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

bool intersects(const Diagonal& d1, const Diagonal& d2) {
  return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) ||
         (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

bool is_m_diagonal(int n, int m, const Diagonal& d) {
  const int size = n * m + 2;
  if (d.a < 1 || d.b > size) throw InvalidArgument("diagonal endpoint outside the polygon");
  // (i, i+jm+1) read in either direction; the short side has b-a-1 = jm.
  const int inner = d.b - d.a - 1;
  if (inner % m != 0) return false;
  const int j = inner / m;
  return j >= 1 && j <= n - 1;
}

int Cell::side_position(const Diagonal& d) const {
  for (std::size_t k = 0; k < sides.size(); ++k) {
    if (sides[k].kind != SideKind::Diagonal) continue;
    if (Diagonal(sides[k].from, sides[k].to) == d) return static_cast<int>(k);
  }
  return -1;
}

std::vector<Diagonal> Cell::diagonal_sides() const {
  std::vector<Diagonal> out;
  for (const auto& s : sides)
    if (s.kind == SideKind::Diagonal) out.emplace_back(s.from, s.to);
  return out;
}

Angulation::Angulation(int n, int m, std::vector<Diagonal> diagonals)
    : n_(n), m_(m), diagonals_(std::move(diagonals)) {
  if (n < 1 || m < 1) throw InvalidArgument("angulation needs n >= 1 and m >= 1");
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
    throw InvalidArgument("repeated diagonal");
  if (static_cast<int>(diagonals_.size()) != n - 1)
    throw InvalidArgument("an angulation of the " + std::to_string(polygon_size()) +
                          "-gon has exactly " + std::to_string(n - 1) + " diagonals");
  for (const auto& d : diagonals_)
    if (!is_m_diagonal(n, m, d)) throw InvalidArgument(d.name() + " is not an m-diagonal");
  for (std::size_t i = 0; i < diagonals_.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
      if (intersects(diagonals_[i], diagonals_[j]))
        throw InvalidArgument(diagonals_[i].name() + " crosses " + diagonals_[j].name());
}

Angulation::Angulation(Trusted, int n, int m, std::vector<Diagonal> diagonals)
    : n_(n), m_(m), diagonals_(std::move(diagonals)) {
  std::sort(diagonals_.begin(), diagonals_.end());
}

bool Angulation::contains(const Diagonal& d) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

Angulation fan(int n, int m) {
  std::vector<Diagonal> diagonals;
  for (int j = 1; j <= n - 1; ++j) diagonals.emplace_back(1, j * m + 2);
  return Angulation(n, m, std::move(diagonals));
}

std::vector<Cell> cells(const Angulation& angulation) {
  const int size = angulation.polygon_size();
  std::vector<std::vector<int>> pending(1);
  pending[0].resize(static_cast<std::size_t>(size));
  std::iota(pending[0].begin(), pending[0].end(), 1);

  std::vector<Cell> out;
  std::vector<int> position(static_cast<std::size_t>(size) + 1);
  while (!pending.empty()) {
    std::vector<int> polygon = std::move(pending.back());
    pending.pop_back();
    std::fill(position.begin(), position.end(), -1);
    for (std::size_t k = 0; k < polygon.size(); ++k) position[polygon[k]] = static_cast<int>(k);

    bool split = false;
    const int last = static_cast<int>(polygon.size()) - 1;
    for (const auto& d : angulation.diagonals()) {
      const int pa = position[d.a];
      const int pb = position[d.b];
      if (pa < 0 || pb < 0) continue;
      if (pb - pa <= 1 || (pa == 0 && pb == last)) continue;  // a side of this polygon
      std::vector<int> inner(polygon.begin() + pa, polygon.begin() + pb + 1);
      std::vector<int> outer(polygon.begin(), polygon.begin() + pa + 1);
      outer.insert(outer.end(), polygon.begin() + pb, polygon.end());
      pending.push_back(std::move(inner));
      pending.push_back(std::move(outer));
      split = true;
      break;
    }
    if (split) continue;

    Cell cell;
    cell.vertices = std::move(polygon);
    const std::size_t count = cell.vertices.size();
    for (std::size_t k = 0; k < count; ++k) {
      const int from = cell.vertices[k];
      const int to = cell.vertices[(k + 1) % count];
      const bool chord = angulation.contains(Diagonal(from, to));
      cell.sides.push_back({from, to, chord ? SideKind::Diagonal : SideKind::Boundary});
    }
    out.push_back(std::move(cell));
  }
  std::sort(out.begin(), out.end(),
            [](const Cell& x, const Cell& y) { return x.vertices < y.vertices; });
  return out;
}

GammaPolygon p_gamma(const Angulation& angulation, const Diagonal& gamma) {
  return p_gamma(angulation, gamma, cells(angulation));
}

GammaPolygon p_gamma(const Angulation& angulation, const Diagonal& gamma,
                     const std::vector<Cell>& all_cells) {
  if (!angulation.contains(gamma))
    throw InvalidArgument(gamma.name() + " is not a diagonal of the angulation");
  std::vector<Cell> touching;
  for (const auto& cell : all_cells)
    if (cell.side_position(gamma) >= 0) touching.push_back(cell);
  if (touching.size() != 2) throw Error("internal: a diagonal must border exactly two cells");
  GammaPolygon out{touching[0], touching[1], {}};
  out.vertices = out.first.vertices;
  out.vertices.insert(out.vertices.end(), out.second.vertices.begin(), out.second.vertices.end());
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  return out;
}

namespace {

Diagonal sigma_in(const std::vector<int>& a, const Diagonal& gamma, int m) {
  const int corners = 2 * m + 2;
  for (int i = 0; i <= m; ++i) {
    if (a[i] == gamma.a && a[i + m + 1] == gamma.b) {
      return Diagonal(a[(i - 1 + corners) % corners], a[(i + m) % corners]);
    }
  }
  throw Error("internal: gamma is not a long diagonal of P_gamma");
}

}  // namespace

namespace {

// Vertices of the cell clockwise from `start` to `end` on the side of gamma
// = (start, end), found by always taking the longest available chord.
void walk_cell(const std::vector<std::vector<int>>& partners, int size, int start, int end,
               std::vector<int>& out) {
  auto offset = [&](int v) { return (v - start + size) % size; };
  const int limit = offset(end);
  int v = start;
  while (v != end) {
    out.push_back(v);
    int best = v % size + 1;
    for (int w : partners[static_cast<std::size_t>(v)]) {
      if (v == start && w == end) continue;
      if (offset(w) > offset(v) && offset(w) <= limit && offset(w) > offset(best)) best = w;
    }
    v = best;
  }
}

}  // namespace

Diagonal sigma(const Angulation& angulation, const Diagonal& gamma) {
  if (!angulation.contains(gamma))
    throw InvalidArgument(gamma.name() + " is not a diagonal of the angulation");
  const int size = angulation.polygon_size();
  std::vector<std::vector<int>> partners(static_cast<std::size_t>(size) + 1);
  for (const auto& d : angulation.diagonals()) {
    partners[static_cast<std::size_t>(d.a)].push_back(d.b);
    partners[static_cast<std::size_t>(d.b)].push_back(d.a);
  }
  std::vector<int> vertices;
  walk_cell(partners, size, gamma.a, gamma.b, vertices);
  walk_cell(partners, size, gamma.b, gamma.a, vertices);
  std::sort(vertices.begin(), vertices.end());
  if (vertices.size() != static_cast<std::size_t>(2 * angulation.m() + 2))
    throw Error("internal: P_gamma must have 2m+2 corners");
  return sigma_in(vertices, gamma, angulation.m());
}

Diagonal sigma(const Angulation& angulation, const Diagonal& gamma,
               const std::vector<Cell>& all_cells) {
  const auto polygon = p_gamma(angulation, gamma, all_cells);
  return sigma_in(polygon.vertices, gamma, angulation.m());
}

Angulation rotate(const Angulation& angulation, const Diagonal& gamma) {
  return rotate_times(angulation, gamma, 1).first;
}

std::pair<Angulation, Diagonal> rotate_times(Angulation angulation, Diagonal gamma, int times) {
  for (int t = 0; t < times; ++t) {
    const Diagonal image = sigma(angulation, gamma);
    std::vector<Diagonal> diagonals = angulation.diagonals();
    *std::find(diagonals.begin(), diagonals.end(), gamma) = image;
    angulation = Angulation(Angulation::Trusted{}, angulation.n(), angulation.m(), std::move(diagonals));
    gamma = image;
  }
  return {std::move(angulation), gamma};
}

Angulation rotate_polygon(const Angulation& angulation, int steps) {
  const int size = angulation.polygon_size();
  const int shift = ((steps % size) + size) % size;
  std::vector<Diagonal> diagonals;
  for (const auto& d : angulation.diagonals())
    diagonals.emplace_back((d.a - 1 + shift) % size + 1, (d.b - 1 + shift) % size + 1);
  return Angulation(Angulation::Trusted{}, angulation.n(), angulation.m(), std::move(diagonals));
}

Angulation rotation_representative(const Angulation& angulation) {
  Angulation best = angulation;
  for (int s = 1; s < angulation.polygon_size(); ++s) best = std::min(best, rotate_polygon(angulation, s));
  return best;
}

std::vector<int> distances(const Angulation& angulation) {
  const auto& diags = angulation.diagonals();
  const std::size_t count = diags.size();
  const auto all_cells = cells(angulation);

  // Cells around each diagonal, and diagonals sharing a cell.
  std::vector<std::vector<std::size_t>> neighbours(count);
  std::vector<bool> touches_one(count, false);
  for (const auto& cell : all_cells) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < count; ++i)
      if (cell.side_position(diags[i]) >= 0) members.push_back(i);
    const bool has_one = cell.vertices.front() == 1;
    for (auto i : members) {
      if (has_one) touches_one[i] = true;
      for (auto j : members)
        if (i != j) neighbours[i].push_back(j);
    }
  }

  std::vector<int> dist(count, -1);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < count; ++i) {
    if (diags[i].has_endpoint(1)) {
      dist[i] = 0;
      queue.push_back(i);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (dist[i] < 0 && touches_one[i]) {
      dist[i] = 1;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (auto j : neighbours[i]) {
      if (dist[j] >= 0) continue;
      dist[j] = dist[i] + 1;
      queue.push_back(j);
    }
  }
  if (std::find(dist.begin(), dist.end(), -1) != dist.end())
    throw Error("internal: diagonal unreachable from vertex 1");
  return dist;
}

int distance(const Angulation& angulation, const Diagonal& gamma) {
  const auto& diags = angulation.diagonals();
  auto it = std::lower_bound(diags.begin(), diags.end(), gamma);
  if (it == diags.end() || *it != gamma)
    throw InvalidArgument(gamma.name() + " is not a diagonal of the angulation");
  return distances(angulation)[static_cast<std::size_t>(it - diags.begin())];
}

RotationPath reduce_to_fan(const Angulation& angulation) {
  RotationPath path;
  Angulation current = angulation;
  const Angulation target = fan(angulation.n(), angulation.m());
  while (current != target) {
    const auto dist = distances(current);
    const auto& diags = current.diagonals();
    std::size_t pick = diags.size();
    for (std::size_t i = 0; i < diags.size(); ++i) {
      if (dist[i] == 1) {
        pick = i;
        break;
      }
    }
    if (pick == diags.size()) throw Error("internal: no distance-1 diagonal outside the fan");
    Diagonal gamma = diags[pick];
    const Diagonal start = gamma;
    int exponent = 0;
    while (!gamma.has_endpoint(1)) {
      const Diagonal image = sigma(current, gamma);
      current = rotate(current, gamma);
      gamma = image;
      if (++exponent > current.m()) throw Error("internal: rotation orbit misses vertex 1");
    }
    path.push_back({start, exponent});
  }
  return path;
}

Angulation apply_rotations(Angulation angulation, const RotationPath& path) {
  for (const auto& step : path) angulation = rotate_times(angulation, step.diagonal, step.exponent).first;
  return angulation;
}

RotationPath invert_rotations(const Angulation& start, const RotationPath& path) {
  RotationPath inverse;
  Angulation current = start;
  const int order = start.m() + 1;
  for (const auto& step : path) {
    auto [next, image] = rotate_times(current, step.diagonal, step.exponent);
    inverse.push_back({image, (order - step.exponent % order) % order});
    current = std::move(next);
  }
  std::reverse(inverse.begin(), inverse.end());
  return inverse;
}

std::uint64_t fuss_catalan(int n, int m) {
  if (n < 1 || m < 1) throw InvalidArgument("fuss_catalan needs n, m >= 1");
  // C(top, n) / (top) with top = (m+1)n + 1, via the exact running product.
  const unsigned __int128 top = static_cast<unsigned __int128>(m + 1) * n + 1;
  unsigned __int128 binom = 1;
  for (int k = 1; k <= n; ++k) binom = binom * (top - n + k) / k;
  return static_cast<std::uint64_t>(binom / top);
}

namespace {

void backtrack(const std::vector<Diagonal>& candidates, std::size_t next, std::size_t need,
               std::vector<Diagonal>& chosen, int n, int m, std::vector<Angulation>& out) {
  if (chosen.size() == need) {
    out.push_back(Angulation(n, m, chosen));
    return;
  }
  for (std::size_t i = next; i < candidates.size(); ++i) {
    if (candidates.size() - i < need - chosen.size()) return;
    bool ok = true;
    for (const auto& c : chosen) {
      if (intersects(c, candidates[i])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(candidates[i]);
    backtrack(candidates, i + 1, need, chosen, n, m, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Angulation> enumerate_angulations(int n, int m) {
  if (n < 1 || m < 1) throw InvalidArgument("enumerate_angulations needs n, m >= 1");
  const int size = n * m + 2;
  if (size > kMaxEnumeratedPolygon)
    throw BudgetExceeded("polygon too large to enumerate (" + std::to_string(size) + " > " +
                         std::to_string(kMaxEnumeratedPolygon) + ")");
  if (fuss_catalan(n, m) > kMaxEnumeratedAngulations)
    throw BudgetExceeded("too many angulations to enumerate");
  std::vector<Diagonal> candidates;
  for (int a = 1; a <= size; ++a)
    for (int b = a + 1; b <= size; ++b)
      if (is_m_diagonal(n, m, Diagonal(a, b))) candidates.emplace_back(a, b);
  std::vector<Angulation> out;
  std::vector<Diagonal> chosen;
  backtrack(candidates, 0, static_cast<std::size_t>(n - 1), chosen, n, m, out);
  return out;
}

Angulation random_angulation(int n, int m, std::mt19937_64& rng, int steps) {
  Angulation current = fan(n, m);
  if (n < 2) return current;
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, current.diagonals().size() - 1);
    std::uniform_int_distribution<int> power(1, m);
    current = rotate_times(current, current.diagonals()[pick(rng)], power(rng)).first;
  }
  return current;
}

}  // namespace angulate
