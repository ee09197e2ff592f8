#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "angulate/angulation.hpp"
#include "angulate/coloured_quiver.hpp"

namespace angulate {

/// The coloured quiver of an angulation. Vertex ids are diagonal names
/// "(a,b)"; the arrow from gamma to delta inside a shared cell has colour
/// (pos(gamma) - pos(delta) - 1) mod (m+2), pos being the clockwise side index.
ColouredQuiver psi(const Angulation& angulation);
/// Same, reusing an already computed cell decomposition.
ColouredQuiver psi(const Angulation& angulation, const std::vector<Cell>& cells);

VertexId vertex_of(const Diagonal& d);
/// Inverse of vertex_of; throws InvalidArgument for ids that are not "(a,b)".
Diagonal diagonal_of(const VertexId& id);

using Mutator = std::function<ColouredQuiver(const ColouredQuiver&, const VertexId&)>;

/// psi(rotate(D, gamma)) against mutator(psi(D), gamma), identifying gamma
/// with sigma(gamma) and fixing every other diagonal. `mutator` defaults to
/// mutate().
bool check_commutation(const Angulation& angulation, const Diagonal& gamma,
                       const Mutator& mutator = {});

struct CommutationReport {
  std::uint64_t angulations = 0;
  std::uint64_t checked = 0;
  /// "<angulation> at <diagonal>" for every failing pair.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Every (angulation, diagonal) pair of enumerate_angulations(n, m).
CommutationReport check_commutation_exhaustive(int n, int m, const Mutator& mutator = {});

/// Colours around one cell with a >= 2 diagonal sides, diagonals listed in
/// clockwise order. clockwise[k] is the colour of gamma_k -> gamma_{k+1},
/// counterclockwise[k] that of gamma_{k+1} -> gamma_k.
struct ColourSumReport {
  Cell cell;
  std::vector<Diagonal> diagonals;
  std::vector<int> clockwise;
  std::vector<int> counterclockwise;
  int clockwise_sum = 0;
  int counterclockwise_sum = 0;

  int expected_clockwise_sum(int m) const;         // (a-1)(m+1)-1
  int expected_counterclockwise_sum(int m) const;  // m-a+2
  bool holds(int m) const;
};

std::vector<ColourSumReport> colour_sums(const Angulation& angulation);

/// Sum of colours along the closed walk v_0 -> v_1 -> ... -> v_0. Throws when
/// some consecutive pair is not joined by an arrow.
int cycle_colour_sum(const ColouredQuiver& q, const std::vector<VertexId>& cycle);

struct BijectionReport {
  int n = 0;
  int m = 0;
  std::uint64_t angulations = 0;
  std::uint64_t rotation_orbits = 0;
  std::uint64_t quiver_classes = 0;
  /// canonical_form(psi) is constant on every polygon-rotation orbit.
  bool constant_on_orbits = false;
  /// Canonical classes of psi(all angulations) equal those of the mutation
  /// class of a_quiver(n, m).
  bool classes_match = false;

  bool ok() const {
    return constant_on_orbits && classes_match && rotation_orbits == quiver_classes;
  }
  static std::string csv_header();
  std::string csv_row() const;
};

inline constexpr int kMaxBijectionPolygon = 14;

BijectionReport check_bijection(int n, int m);

/// The angulation {(1, d+1), (d+1, 2d+1), ..., (d^2+1, 1)} of the (d^2+d)-gon,
/// with m = d-1 and n = d+2. Requires d >= 2.
Angulation star_angulation(int d);

/// Labels diagonals by following a reduction path back from the fan, where
/// (1, jm+2) carries label j and a label moves with sigma. `path` is then the
/// mutation path (over labels) taking a_quiver(n, m) to the relabelled psi.
struct ChainLabelling {
  std::map<Diagonal, int> labels;
  MutationPath path;

  std::vector<std::pair<VertexId, VertexId>> renaming() const;  // diagonal id -> label
};

ChainLabelling chain_labelling(const Angulation& angulation);

}  // namespace angulate
