#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace angulate {

/// A chord of the polygon between vertices a < b (1-based, clockwise).
struct Diagonal {
  int a = 0;
  int b = 0;

  Diagonal() = default;
  /// Stores the endpoints normalized so that a < b.
  Diagonal(int i, int j);

  bool has_endpoint(int v) const { return a == v || b == v; }
  /// "(a,b)"; also used as the quiver vertex id of the diagonal.
  std::string name() const;

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Strict interleaving a1 < a2 < b1 < b2 (or the mirror); shared endpoints
/// do not intersect.
bool intersects(const Diagonal& d1, const Diagonal& d2);

/// True iff d = (i, i + jm + 1) modulo nm+2 for some j in 1..n-1. Throws
/// InvalidArgument for endpoints outside 1..nm+2.
bool is_m_diagonal(int n, int m, const Diagonal& d);

enum class SideKind { Boundary, Diagonal };

struct Side {
  int from = 0;
  int to = 0;
  SideKind kind = SideKind::Boundary;

  friend bool operator==(const Side&, const Side&) = default;
};

/// One (m+2)-gon of the decomposition. `vertices` run clockwise (increasing
/// cyclic order) from the smallest label; side k joins vertices[k] and
/// vertices[k+1 mod size].
struct Cell {
  std::vector<int> vertices;
  std::vector<Side> sides;

  /// Position of `d` among the sides, or -1.
  int side_position(const Diagonal& d) const;
  std::vector<Diagonal> diagonal_sides() const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// An (m+2)-angulation of the regular (nm+2)-gon: n-1 pairwise
/// non-intersecting m-diagonals, kept sorted.
class Angulation {
 public:
  /// Validates every invariant; throws InvalidArgument otherwise.
  Angulation(int n, int m, std::vector<Diagonal> diagonals);

  int n() const { return n_; }
  int m() const { return m_; }
  int polygon_size() const { return n_ * m_ + 2; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  bool contains(const Diagonal& d) const;

  friend auto operator<=>(const Angulation&, const Angulation&) = default;

 private:
  struct Trusted {};
  Angulation(Trusted, int n, int m, std::vector<Diagonal> diagonals);
  friend std::pair<Angulation, Diagonal> rotate_times(Angulation, Diagonal, int);
  friend Angulation rotate_polygon(const Angulation&, int);

  int n_ = 1;
  int m_ = 1;
  std::vector<Diagonal> diagonals_;
};

/// {(1, jm+2) : j = 1..n-1}.
Angulation fan(int n, int m);

/// The n cells, sorted by vertex list.
std::vector<Cell> cells(const Angulation& angulation);

/// The (2m+2)-gon formed by the two cells having gamma as a side.
struct GammaPolygon {
  Cell first;
  Cell second;
  /// Sorted union of the two cells' vertices, a_0 < ... < a_{2m+1}.
  std::vector<int> vertices;
};

GammaPolygon p_gamma(const Angulation& angulation, const Diagonal& gamma);
/// Same, given cells(angulation).
GammaPolygon p_gamma(const Angulation& angulation, const Diagonal& gamma,
                     const std::vector<Cell>& cells);

/// sigma(gamma): gamma moved one step counterclockwise inside P_gamma.
Diagonal sigma(const Angulation& angulation, const Diagonal& gamma);
Diagonal sigma(const Angulation& angulation, const Diagonal& gamma, const std::vector<Cell>& cells);

/// (Delta \ gamma) u {sigma(gamma)}.
Angulation rotate(const Angulation& angulation, const Diagonal& gamma);

/// Applies rotate `times` times, following gamma through its sigma images.
/// Returns the angulation and the final image of gamma.
std::pair<Angulation, Diagonal> rotate_times(Angulation angulation, Diagonal gamma, int times);

/// Relabels every polygon vertex v -> v + steps (mod nm+2).
Angulation rotate_polygon(const Angulation& angulation, int steps = 1);

/// Least rotate_polygon image, identifying angulations up to polygon rotation.
Angulation rotation_representative(const Angulation& angulation);

/// Breadth-first layering from the diagonals at vertex 1: distance 0 for
/// diagonals with endpoint 1, distance 1 for any other diagonal whose P_gamma
/// contains vertex 1, then one more per cell shared with a closer diagonal.
/// Entries are aligned with angulation.diagonals().
std::vector<int> distances(const Angulation& angulation);
int distance(const Angulation& angulation, const Diagonal& gamma);

/// One burst r_gamma^exponent of a reduction path. `diagonal` is gamma as it
/// sits in the angulation the burst is applied to.
struct RotationStep {
  Diagonal diagonal;
  int exponent = 1;

  friend bool operator==(const RotationStep&, const RotationStep&) = default;
};

using RotationPath = std::vector<RotationStep>;

/// Rotations taking the angulation to fan(n, m), distance-1 diagonals first.
RotationPath reduce_to_fan(const Angulation& angulation);

/// Applies the bursts in order.
Angulation apply_rotations(Angulation angulation, const RotationPath& path);

/// The path that undoes `path` when applied to its end point.
RotationPath invert_rotations(const Angulation& start, const RotationPath& path);

/// Number of (m+2)-angulations of the (nm+2)-gon, 1/((m+1)n+1) * C((m+1)n+1, n).
std::uint64_t fuss_catalan(int n, int m);

inline constexpr int kMaxEnumeratedPolygon = 20;
inline constexpr std::uint64_t kMaxEnumeratedAngulations = 3'000'000;

/// Every (m+2)-angulation by backtracking over non-crossing m-diagonals, in
/// lexicographic order of their sorted diagonal lists.
std::vector<Angulation> enumerate_angulations(int n, int m);

/// Random walk of `steps` rotations started at the fan.
Angulation random_angulation(int n, int m, std::mt19937_64& rng, int steps = 64);

}  // namespace angulate
