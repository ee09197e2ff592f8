#pragma once

#include <map>
#include <string>
#include <vector>

#include "angulate/coloured_quiver.hpp"

namespace angulate {

/// A generator to the power +1 or -1.
struct Letter {
  VertexId gen;
  int exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// Positive word s_{g1} s_{g2} ...
Word positive_word(const std::vector<VertexId>& gens);

/// "s1 s2^-1 s3"; the empty word prints as "e".
std::string to_string(const Word& w);

/// Generator-image map between two presentations. Generators without an
/// entry map to themselves.
struct GroupHom {
  std::map<VertexId, Word> images;

  Word image(const VertexId& gen) const;
  /// Substitutes every letter and freely reduces.
  Word apply(const Word& w) const;
};

/// outer after inner: g -> outer.apply(inner.image(g)) on inner's generators.
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

}  // namespace angulate
