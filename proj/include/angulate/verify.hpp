#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "angulate/coloured_quiver.hpp"

namespace angulate {

struct SuiteOptions {
  int n = 4;
  int m = 1;
  std::optional<std::uint64_t> seed;
  /// Extra seeded random cases (commutation).
  int random = 0;
  /// Mutation-ball radius (homomorphisms, order).
  int depth = 3;
  /// Checked instead of the a_quiver ball (order).
  std::optional<ColouredQuiver> quiver;
};

/// Machine-readable result: {"suite", "status": "pass"|"fail"|"skipped",
/// "checked", "failures": [...], ...suite-specific fields}.
nlohmann::json run_suite(const std::string& suite, const SuiteOptions& options);

bool suite_passed(const nlohmann::json& report);

}  // namespace angulate
