#include "angulate/correspondence.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "angulate/error.hpp"

namespace angulate {

VertexId vertex_of(const Diagonal& d) { return VertexId(d.name()); }

Diagonal diagonal_of(const VertexId& id) {
  const std::string& s = id.str();
  const auto comma = s.find(',');
  if (s.size() < 5 || s.front() != '(' || s.back() != ')' || comma == std::string::npos)
    throw InvalidArgument("'" + s + "' does not name a diagonal");
  int a = 0;
  int b = 0;
  const char* first = s.data() + 1;
  const char* mid = s.data() + comma;
  const char* last = s.data() + s.size() - 1;
  auto ra = std::from_chars(first, mid, a);
  auto rb = std::from_chars(mid + 1, last, b);
  if (ra.ptr != mid || rb.ptr != last || ra.ec != std::errc{} || rb.ec != std::errc{})
    throw InvalidArgument("'" + s + "' does not name a diagonal");
  return Diagonal(a, b);
}

ColouredQuiver psi(const Angulation& angulation) { return psi(angulation, cells(angulation)); }

ColouredQuiver psi(const Angulation& angulation, const std::vector<Cell>& all_cells) {
  const auto& diags = angulation.diagonals();
  std::vector<VertexId> ids;
  ids.reserve(diags.size());
  for (const auto& d : diags) ids.push_back(vertex_of(d));
  ColouredQuiver q(angulation.m(), std::move(ids));

  const int sides = angulation.m() + 2;
  auto index = [&](const Diagonal& d) {
    return static_cast<std::size_t>(std::lower_bound(diags.begin(), diags.end(), d) - diags.begin());
  };
  for (const auto& cell : all_cells) {
    std::vector<std::pair<int, std::size_t>> present;  // (side position, vertex index)
    for (std::size_t k = 0; k < cell.sides.size(); ++k) {
      const auto& side = cell.sides[k];
      if (side.kind == SideKind::Diagonal)
        present.emplace_back(static_cast<int>(k), index(Diagonal(side.from, side.to)));
    }
    for (const auto& [p, i] : present) {
      for (const auto& [r, j] : present) {
        if (i == j) continue;
        const int colour = (((p - r - 1) % sides) + sides) % sides;
        q.add_arrows(i, j, colour);
      }
    }
  }
  return q;
}

namespace {

bool commutes(const Angulation& angulation, const std::vector<Cell>& all_cells,
              const ColouredQuiver& quiver, const Diagonal& gamma, const Mutator& mutator) {
  const Diagonal image = sigma(angulation, gamma, all_cells);
  std::vector<Diagonal> diags = angulation.diagonals();
  *std::find(diags.begin(), diags.end(), gamma) = image;
  const Angulation rotated(angulation.n(), angulation.m(), std::move(diags));
  const ColouredQuiver expected = psi(rotated);
  const ColouredQuiver mutated =
      mutator ? mutator(quiver, vertex_of(gamma)) : mutate(quiver, vertex_of(gamma));
  return relabel(mutated, {{vertex_of(gamma), vertex_of(image)}}) == expected;
}

std::string describe(const Angulation& angulation) {
  std::ostringstream out;
  out << "n=" << angulation.n() << " m=" << angulation.m() << " {";
  bool first = true;
  for (const auto& d : angulation.diagonals()) {
    out << (first ? "" : " ") << d.name();
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

bool check_commutation(const Angulation& angulation, const Diagonal& gamma, const Mutator& mutator) {
  if (!angulation.contains(gamma))
    throw InvalidArgument(gamma.name() + " is not a diagonal of the angulation");
  const auto all_cells = cells(angulation);
  return commutes(angulation, all_cells, psi(angulation, all_cells), gamma, mutator);
}

CommutationReport check_commutation_exhaustive(int n, int m, const Mutator& mutator) {
  CommutationReport report;
  for (const auto& angulation : enumerate_angulations(n, m)) {
    ++report.angulations;
    const auto all_cells = cells(angulation);
    const auto quiver = psi(angulation, all_cells);
    for (const auto& gamma : angulation.diagonals()) {
      ++report.checked;
      if (!commutes(angulation, all_cells, quiver, gamma, mutator))
        report.failures.push_back(describe(angulation) + " at " + gamma.name());
    }
  }
  return report;
}

int ColourSumReport::expected_clockwise_sum(int m) const {
  const int a = static_cast<int>(diagonals.size());
  return (a - 1) * (m + 1) - 1;
}

int ColourSumReport::expected_counterclockwise_sum(int m) const {
  return m - static_cast<int>(diagonals.size()) + 2;
}

bool ColourSumReport::holds(int m) const {
  if (clockwise_sum != expected_clockwise_sum(m)) return false;
  if (counterclockwise_sum != expected_counterclockwise_sum(m)) return false;
  for (std::size_t k = 0; k < clockwise.size(); ++k)
    if (clockwise[k] + counterclockwise[k] != m) return false;
  return true;
}

int cycle_colour_sum(const ColouredQuiver& q, const std::vector<VertexId>& cycle) {
  int sum = 0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const auto& from = cycle[k];
    const auto& to = cycle[(k + 1) % cycle.size()];
    const auto c = q.colour(from, to);
    if (!c) throw InvalidArgument("no arrow " + from.str() + " -> " + to.str());
    sum += *c;
  }
  return sum;
}

std::vector<ColourSumReport> colour_sums(const Angulation& angulation) {
  const auto all_cells = cells(angulation);
  const auto quiver = psi(angulation, all_cells);
  std::vector<ColourSumReport> out;
  for (const auto& cell : all_cells) {
    ColourSumReport report;
    report.cell = cell;
    report.diagonals = cell.diagonal_sides();
    const std::size_t a = report.diagonals.size();
    if (a < 2) continue;
    for (std::size_t k = 0; k < a; ++k) {
      const auto here = vertex_of(report.diagonals[k]);
      const auto next = vertex_of(report.diagonals[(k + 1) % a]);
      report.clockwise.push_back(quiver.colour(here, next).value());
      report.counterclockwise.push_back(quiver.colour(next, here).value());
    }
    for (int c : report.clockwise) report.clockwise_sum += c;
    for (int c : report.counterclockwise) report.counterclockwise_sum += c;
    out.push_back(std::move(report));
  }
  return out;
}

std::string BijectionReport::csv_header() { return "n,m,angulations,rotation_orbits,quiver_classes"; }

std::string BijectionReport::csv_row() const {
  std::ostringstream out;
  out << n << ',' << m << ',' << angulations << ',' << rotation_orbits << ',' << quiver_classes;
  return out.str();
}

BijectionReport check_bijection(int n, int m) {
  if (n * m + 2 > kMaxBijectionPolygon)
    throw BudgetExceeded("bijection check limited to polygons with at most " +
                         std::to_string(kMaxBijectionPolygon) + " vertices");
  BijectionReport report;
  report.n = n;
  report.m = m;
  std::map<Angulation, CanonicalKey> orbit_key;
  std::set<CanonicalKey> from_angulations;
  report.constant_on_orbits = true;
  for (const auto& angulation : enumerate_angulations(n, m)) {
    ++report.angulations;
    const auto key = canonical_form(psi(angulation));
    from_angulations.insert(key);
    const auto [it, inserted] = orbit_key.emplace(rotation_representative(angulation), key);
    if (!inserted && it->second != key) report.constant_on_orbits = false;
  }
  report.rotation_orbits = orbit_key.size();
  const auto classes = mutation_class(a_quiver(n, m));
  const std::set<CanonicalKey> from_mutation(classes.begin(), classes.end());
  report.quiver_classes = from_mutation.size();
  report.classes_match = from_mutation == from_angulations;
  return report;
}

Angulation star_angulation(int d) {
  if (d < 2) throw InvalidArgument("star_angulation needs d >= 2 (m = d-1 must be at least 1)");
  const int size = d * d + d;
  std::vector<Diagonal> diagonals;
  for (int k = 0; k <= d; ++k) {
    const int from = k * d + 1;
    const int to = (k + 1) * d + 1;
    diagonals.emplace_back(from, to > size ? to - size : to);
  }
  return Angulation(d + 2, d - 1, std::move(diagonals));
}

std::vector<std::pair<VertexId, VertexId>> ChainLabelling::renaming() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [d, label] : labels) out.emplace_back(vertex_of(d), VertexId(label));
  return out;
}

ChainLabelling chain_labelling(const Angulation& angulation) {
  const int n = angulation.n();
  const int m = angulation.m();
  const Angulation start = fan(n, m);
  const RotationPath forward = invert_rotations(angulation, reduce_to_fan(angulation));

  ChainLabelling out;
  for (int j = 1; j <= n - 1; ++j) out.labels[Diagonal(1, j * m + 2)] = j;
  Angulation current = start;
  for (const auto& step : forward) {
    const int label = out.labels.at(step.diagonal);
    for (int s = 0; s < step.exponent; ++s) out.path.emplace_back(label);
    auto [next, image] = rotate_times(current, step.diagonal, step.exponent);
    out.labels.erase(step.diagonal);
    out.labels[image] = label;
    current = std::move(next);
  }
  if (current != angulation) throw Error("internal: reduction path does not return to the angulation");
  return out;
}

}  // namespace angulate
