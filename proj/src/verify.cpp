#include "angulate/verify.hpp"

#include <random>

#include "angulate/angulation.hpp"
#include "angulate/correspondence.hpp"
#include "angulate/error.hpp"
#include "angulate/presentation.hpp"

namespace angulate {

namespace {

nlohmann::json start(const std::string& suite, const SuiteOptions& o) {
  return {{"suite", suite}, {"n", o.n}, {"m", o.m}, {"checked", 0}, {"failures", nlohmann::json::array()}};
}

void finish(nlohmann::json& report) {
  if (!report.contains("status")) report["status"] = report["failures"].empty() ? "pass" : "fail";
}

void skip(nlohmann::json& report, const std::string& why) {
  report["status"] = "skipped";
  report["reason"] = why;
}

nlohmann::json commutation(const SuiteOptions& o) {
  auto report = start("commutation", o);
  std::uint64_t checked = 0;
  bool ran = false;
  if (o.n * o.m + 2 <= 14) {
    const auto exhaustive = check_commutation_exhaustive(o.n, o.m);
    checked += exhaustive.checked;
    report["angulations"] = exhaustive.angulations;
    for (const auto& f : exhaustive.failures) report["failures"].push_back(f);
    ran = true;
  }
  if (o.random > 0) {
    std::mt19937_64 rng(*o.seed);
    for (int i = 0; i < o.random; ++i) {
      const Angulation a = random_angulation(o.n, o.m, rng);
      if (a.diagonals().empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, a.diagonals().size() - 1);
      const Diagonal gamma = a.diagonals()[pick(rng)];
      ++checked;
      if (!check_commutation(a, gamma)) report["failures"].push_back("random case " + std::to_string(i));
    }
    ran = true;
  }
  report["checked"] = checked;
  if (!ran) skip(report, "polygon larger than 14 vertices; pass --random with --seed");
  return report;
}

nlohmann::json colour_sum_suite(const SuiteOptions& o) {
  auto report = start("colour-sums", o);
  std::uint64_t checked = 0;
  try {
    for (const auto& a : enumerate_angulations(o.n, o.m)) {
      for (const auto& cell : colour_sums(a)) {
        ++checked;
        if (!cell.holds(o.m)) {
          std::string where = "cell";
          for (int v : cell.cell.vertices) where += " " + std::to_string(v);
          report["failures"].push_back(where);
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    skip(report, e.what());
  }
  report["checked"] = checked;
  return report;
}

nlohmann::json homomorphism_suite(const SuiteOptions& o) {
  auto report = start("homomorphisms", o);
  std::uint64_t checked = 0;
  const int m = o.m;
  try {
    for (const auto& node : mutation_ball(a_quiver(o.n, m), o.depth)) {
      const Presentation source = presentation_of(node.quiver);
      const Translation here = translation_along(o.n, m, node.path);
      for (const auto& k : node.quiver.vertices()) {
        MutationPath forward = node.path;
        forward.push_back(k);
        const auto hom = verify_hom(source, phi(node.quiver, k), translation_along(o.n, m, forward));
        checked += hom.checked;
        for (const auto& f : hom.failures)
          report["failures"].push_back("phi at " + k.str() + " breaks " + f);

        const GroupHom cycle = compose_chain(node.quiver, MutationPath(static_cast<std::size_t>(m + 1), k));
        for (const auto& g : node.quiver.vertices()) {
          ++checked;
          const Word conj{{k, 1}, {g, 1}, {k, -1}};
          if (!equal(here.apply(cycle.image(g)), here.apply(conj)))
            report["failures"].push_back("(m+1)-fold phi at " + k.str() + " is not conjugation on s" + g.str());
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    skip(report, e.what());
  }
  report["checked"] = checked;
  report["depth"] = o.depth;
  return report;
}

nlohmann::json bijection_suite(const SuiteOptions& o) {
  auto report = start("bijection", o);
  try {
    const auto b = check_bijection(o.n, o.m);
    report["angulations"] = b.angulations;
    report["rotation_orbits"] = b.rotation_orbits;
    report["quiver_classes"] = b.quiver_classes;
    report["constant_on_orbits"] = b.constant_on_orbits;
    report["classes_match"] = b.classes_match;
    report["csv"] = BijectionReport::csv_header() + "\n" + b.csv_row() + "\n";
    report["checked"] = b.angulations;
    if (!b.constant_on_orbits) report["failures"].push_back("psi class varies within a rotation orbit");
    if (!b.classes_match) report["failures"].push_back("quiver classes differ from the mutation class");
    if (b.rotation_orbits != b.quiver_classes) report["failures"].push_back("orbit and class counts differ");
  } catch (const BudgetExceeded& e) {
    skip(report, e.what());
  }
  return report;
}

nlohmann::json order_suite(const SuiteOptions& o) {
  auto report = start("order", o);
  std::uint64_t checked = 0;
  auto check = [&](const ColouredQuiver& q, const std::string& where) {
    for (const auto& k : q.vertices()) {
      ++checked;
      const auto back = mutate_path(q, MutationPath(static_cast<std::size_t>(q.m() + 1), k));
      if (!(back == q)) report["failures"].push_back(where + ": mutating " + std::to_string(q.m() + 1) +
                                                     " times at " + k.str() + " does not restore the quiver");
    }
  };
  if (o.quiver) {
    report["m"] = o.quiver->m();
    report.erase("n");
    check(*o.quiver, "input");
  } else {
    for (const auto& node : mutation_ball(a_quiver(o.n, o.m), o.depth)) {
      std::string where = "path";
      for (const auto& k : node.path) where += " " + k.str();
      check(node.quiver, where);
    }
    report["depth"] = o.depth;
  }
  report["checked"] = checked;
  return report;
}

}  // namespace

nlohmann::json run_suite(const std::string& suite, const SuiteOptions& options) {
  if (options.n < 1 || options.m < 1) throw InvalidArgument("--n and --m must be at least 1");
  if (options.random > 0 && !options.seed) throw InvalidArgument("randomized suites need --seed");
  nlohmann::json report;
  if (suite == "commutation")
    report = commutation(options);
  else if (suite == "colour-sums")
    report = colour_sum_suite(options);
  else if (suite == "homomorphisms")
    report = homomorphism_suite(options);
  else if (suite == "bijection")
    report = bijection_suite(options);
  else if (suite == "order")
    report = order_suite(options);
  else
    throw InvalidArgument("unknown suite '" + suite + "'");
  if (options.seed) report["seed"] = *options.seed;
  finish(report);
  return report;
}

bool suite_passed(const nlohmann::json& report) { return report.at("status") != "fail"; }

}  // namespace angulate
