#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace angulate {

/// Opaque vertex identifier. Integers and diagonal names are both stored as
/// their decimal/text spelling; mutation never renames a vertex.
class VertexId {
 public:
  VertexId() = default;
  VertexId(int value) : name_(std::to_string(value)) {}  // NOLINT(implicit)
  VertexId(std::string name) : name_(std::move(name)) {}  // NOLINT(implicit)
  VertexId(const char* name) : name_(name) {}  // NOLINT(implicit)

  const std::string& str() const { return name_; }
  /// The integer value when the id is spelled as a (signed) decimal integer.
  std::optional<long long> as_integer() const;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;

 private:
  std::string name_;
};

/// One bundle of parallel arrows of a single colour.
struct Arrow {
  VertexId from;
  VertexId to;
  int colour = 0;
  int mult = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// An m-coloured quiver: vertices plus counts q_ij^(c) of arrows i -> j of
/// colour c in {0..m}. Arrow counts are stored densely per ordered vertex
/// pair, both skew partners explicitly, so that an ill-formed quiver can be
/// represented and reported by validate().
class ColouredQuiver {
 public:
  ColouredQuiver() = default;
  ColouredQuiver(int m, std::vector<VertexId> vertices);

  int m() const { return m_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const VertexId& vertex(std::size_t index) const { return vertices_.at(index); }

  std::optional<std::size_t> find(const VertexId& id) const;
  /// Index of `id`; throws InvalidArgument for an unknown vertex.
  std::size_t index_of(const VertexId& id) const;

  int multiplicity(std::size_t i, std::size_t j, int colour) const {
    return counts_[slot(i, j, colour)];
  }
  void set_multiplicity(std::size_t i, std::size_t j, int colour, int count);
  /// Adds `count` arrows i -(c)-> j only; the caller is responsible for the
  /// partner j -(m-c)-> i.
  void add_arrows(std::size_t i, std::size_t j, int colour, int count = 1);
  /// Adds i -(c)-> j together with its skew partner j -(m-c)-> i.
  void add_arrow_pair(std::size_t i, std::size_t j, int colour, int count = 1);
  void add_arrow_pair(const VertexId& i, const VertexId& j, int colour, int count = 1) {
    add_arrow_pair(index_of(i), index_of(j), colour, count);
  }

  /// Total number of arrows i -> j over all colours.
  int total(std::size_t i, std::size_t j) const;
  bool adjacent(std::size_t i, std::size_t j) const { return total(i, j) + total(j, i) > 0; }
  /// Colour of the arrows i -> j when they exist and are monochromatic.
  std::optional<int> colour(std::size_t i, std::size_t j) const;
  std::optional<int> colour(const VertexId& i, const VertexId& j) const {
    return colour(index_of(i), index_of(j));
  }

  /// Every non-empty (from, to, colour) bundle, in vertex-index order.
  std::vector<Arrow> arrows() const;

  /// Same colour bound, vertex set and arrows, matched by vertex id (the
  /// order of the vertex list is irrelevant).
  friend bool operator==(const ColouredQuiver& a, const ColouredQuiver& b);

 private:
  std::size_t slot(std::size_t i, std::size_t j, int colour) const {
    return (i * vertices_.size() + j) * static_cast<std::size_t>(m_ + 1) +
           static_cast<std::size_t>(colour);
  }

  int m_ = 1;
  std::vector<VertexId> vertices_;
  std::vector<int> counts_;
};

enum class Axiom { NoLoops, Monochromaticity, SkewSymmetry };

struct Violation {
  Axiom axiom;
  VertexId from;
  VertexId to;
  /// Offending colour; -1 for monochromaticity (the pair carries several).
  int colour = -1;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

ValidationReport validate(const ColouredQuiver& q);

using MutationPath = std::vector<VertexId>;

/// Closed-formula mutation (case split k = i, k = j, otherwise the max{0,...}
/// expression). Kept for cross-validation of mutate().
ColouredQuiver mutate_formula(const ColouredQuiver& q, const VertexId& k);

/// Three-step mutation: shift colours at k, compose i -(c)-> k -(0)-> j for
/// c != m into i -(c)-> j, then cancel parallel arrows of different colours.
ColouredQuiver mutate(const ColouredQuiver& q, const VertexId& k);

/// The three-step procedure with the c != m guard dropped in the composition
/// step. A path i -(m)-> k -(0)-> j always comes with its mirror
/// j -(m)-> k -(0)-> i, and adding both pairs would cancel, so a colour-m
/// path only contributes when i precedes j in vertex order. Not a valid
/// mutation; exists as a negative control.
ColouredQuiver mutate_without_colour_guard(const ColouredQuiver& q, const VertexId& k);

/// Left fold of mutate() over `path`.
ColouredQuiver mutate_path(ColouredQuiver q, const MutationPath& path);

/// The linear quiver 1 -(0)-> 2 -(0)-> ... -(0)-> n-1 with colour-m reverses.
ColouredQuiver a_quiver(int n, int m);

/// Renames vertices; ids absent from `renaming` are kept.
ColouredQuiver relabel(const ColouredQuiver& q,
                       const std::vector<std::pair<VertexId, VertexId>>& renaming);

/// Relabelling-invariant key: lexicographically least adjacency code over all
/// vertex orders. Limited to kMaxCanonicalVertices vertices.
struct CanonicalKey {
  int m = 0;
  int size = 0;
  std::vector<std::int32_t> code;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline constexpr std::size_t kMaxCanonicalVertices = 10;

CanonicalKey canonical_form(const ColouredQuiver& q);

/// Exact (label-sensitive) fingerprint, usable as a hash-map key.
std::string fingerprint(const ColouredQuiver& q);

/// A quiver reached from a root by mutating along `path`.
struct MutationNode {
  ColouredQuiver quiver;
  MutationPath path;
};

/// Breadth-first ball of labelled quivers within `depth` mutations of `root`,
/// each reported once with a shortest path.
std::vector<MutationNode> mutation_ball(const ColouredQuiver& root, int depth);

/// Canonical keys of the whole mutation class of `root` (breadth-first over
/// relabelling classes). Throws BudgetExceeded past `max_classes`.
std::vector<CanonicalKey> mutation_class(const ColouredQuiver& root,
                                         std::size_t max_classes = 100000);

}  // namespace angulate
