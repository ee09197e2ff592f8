#include "angulate/budget.hpp"

#include <cstdlib>
#include <sstream>

#include "angulate/error.hpp"

namespace angulate {

namespace {

std::size_t parse_count(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || value == 0)
    throw InvalidArgument("bad budget value '" + text + "'");
  return static_cast<std::size_t>(value);
}

}  // namespace

Budgets parse_budgets(const std::string& text) {
  Budgets out;
  if (text.find('=') == std::string::npos) {
    out.oracle_letters = out.coset_table = parse_count(text);
    return out;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("bad budget entry '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::size_t value = parse_count(item.substr(eq + 1));
    if (key == "oracle")
      out.oracle_letters = value;
    else if (key == "coset")
      out.coset_table = value;
    else
      throw InvalidArgument("unknown budget '" + key + "'");
  }
  return out;
}

const Budgets& budgets() {
  static const Budgets value = [] {
    const char* env = std::getenv("ANGULATE_BUDGET");
    return env ? parse_budgets(env) : Budgets{};
  }();
  return value;
}

}  // namespace angulate
