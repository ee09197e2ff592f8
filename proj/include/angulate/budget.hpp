#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace angulate {

struct Budgets {
  /// Longest braid word the oracle accepts.
  std::size_t oracle_letters = 10'000;
  /// Most cosets a single enumeration may define.
  std::size_t coset_table = 2'000'000;
};

/// Parses "N" (both budgets) or a comma list of "oracle=N" / "coset=N".
/// Throws InvalidArgument on malformed text.
Budgets parse_budgets(const std::string& text);

/// Defaults overridden by the ANGULATE_BUDGET environment variable, read once.
const Budgets& budgets();

}  // namespace angulate
