#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "angulate/word.hpp"

namespace angulate {

struct BraidLetter {
  int gen = 1;  // 1..strands-1
  int exp = 1;  // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the standard generators of the braid group on `strands` strands.
struct BraidWord {
  int strands = 2;
  std::vector<BraidLetter> letters;

  /// Throws InvalidArgument when strands < 2 or a generator is out of range.
  void check() const;
  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& other) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Whitespace-separated "sK" / "sK^-1" tokens. Throws ParseError.
BraidWord parse_braid(int strands, const std::string& text);
std::string to_string(const BraidWord& w);

/// Reads a Word over integer-named generators as a braid word.
BraidWord to_braid(int strands, const Word& w);
Word to_word(const BraidWord& w);

/// A permutation braid, stored as the strand permutation: entry p is the
/// image of position p. Product A*B has entries A[B[p]].
using Permutation = std::vector<std::uint8_t>;

/// Left normal form Delta^power * factors[0] * ... * factors[r-1] with every
/// factor a proper simple braid (neither identity nor Delta) and every
/// adjacent pair left-weighted. Two braids are equal iff their forms are.
struct BraidNormalForm {
  int strands = 2;
  int power = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const BraidNormalForm&, const BraidNormalForm&) = default;
};

/// Throws BudgetExceeded past budgets().oracle_letters letters.
BraidNormalForm normal_form(const BraidWord& w);
bool equal(const BraidWord& a, const BraidWord& b);
/// A word spelling the normal form (Delta powers, then positive factors).
BraidWord to_braid_word(const BraidNormalForm& nf);

/// Image of the braid in the symmetric group: s_i acts as the transposition
/// (i, i+1). Entries are 1-based.
std::vector<int> permutation_image(const BraidWord& w);

}  // namespace angulate
