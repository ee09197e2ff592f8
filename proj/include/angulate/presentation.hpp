#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "angulate/angulation.hpp"
#include "angulate/braid.hpp"
#include "angulate/coloured_quiver.hpp"
#include "angulate/word.hpp"

namespace angulate {

enum class RelationKind { Commute, Braid, Cycle3 };

std::string to_string(RelationKind kind);

/// An equality chain sides[0] = sides[1] (= sides[2] for cycle3 relations).
struct Relation {
  RelationKind kind = RelationKind::Commute;
  std::vector<Word> sides;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  std::vector<VertexId> generators;
  std::vector<Relation> relations;

  /// "generators: s1 s2 ..." then one relation per line.
  std::string to_text() const;
  nlohmann::json to_json() const;
  /// Each consecutive equality of every relation as a (lhs, rhs) pair.
  std::vector<std::pair<Word, Word>> relator_pairs() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Generators follow the quiver's vertex order. Relations: commuting for
/// non-adjacent pairs, braid for adjacent pairs, then for each triangle the
/// cycle chain along the orientation with colour sum 2m+1, started at the
/// earliest vertex. Throws InvalidArgument for invalid quivers, parallel
/// arrows, or a triangle with no qualifying orientation.
Presentation presentation_of(const ColouredQuiver& q);

/// The type A_{strands-1} presentation on generators 1..strands-1.
Presentation standard_presentation(int strands);

/// s_i -> t_k t_i t_k^-1 when q has an arrow k -(0)-> i, else s_i -> t_i.
GroupHom phi(const ColouredQuiver& q, const VertexId& k);
/// t_i -> s_k^-1 s_i s_k when mutate(q, k) has an arrow k -(m)-> i.
GroupHom phi_inverse(const ColouredQuiver& q, const VertexId& k);
/// phi maps along the path from q, composed left to right by substitution.
GroupHom compose_chain(const ColouredQuiver& q, const MutationPath& path);

/// Generator images in the standard braid group.
struct Translation {
  int strands = 2;
  std::map<VertexId, BraidWord> images;

  BraidWord apply(const Word& w) const;
};

/// Translation for mutate_path(a_quiver(n, m), path): starting from s_j -> s_j
/// on a_quiver, each mutation step composes with phi_inverse. Images are kept
/// in normal-form spelling.
Translation translation_along(int n, int m, const MutationPath& path);

/// Translation for psi(angulation), keyed by diagonal ids, built from the
/// chain labelling.
Translation translation_for(const Angulation& angulation);

struct HomReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// For every relator pair (lhs, rhs) of `source`, checks that
/// target(h(lhs)) and target(h(rhs)) agree in the braid group.
HomReport verify_hom(const Presentation& source, const GroupHom& h, const Translation& target);

/// For vertices i_1..i_j of q (in the given cyclic order) spanning a complete
/// subquiver where every increasing triple a<b<c has colour sum
/// l(a,b)+l(b,c)+l(c,a) = 2m+1, checks that all cyclic shifts of
/// s_{i_1} ... s_{i_j} s_{i_1} translate to equal braids. Throws
/// InvalidArgument when the hypothesis fails.
bool kcycle_relation_check(const ColouredQuiver& q, const std::vector<VertexId>& cycle,
                           const Translation& translation);

}  // namespace angulate
