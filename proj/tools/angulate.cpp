// Command-line front end: mutate quiver files, run verification suites,
// render angulations and serve the session API.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "angulate/angulation_io.hpp"
#include "angulate/correspondence.hpp"
#include "angulate/error.hpp"
#include "angulate/quiver_io.hpp"
#include "angulate/service.hpp"
#include "angulate/verify.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw angulate::ParseError("cannot open '" + path + "'");
  auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw angulate::ParseError("'" + path + "' is not valid JSON");
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw angulate::Error("cannot write '" + path + "'");
  out << text;
}

int cmd_mutate(const std::string& file, const std::string& vertex, int times, const std::string& output) {
  const auto q = angulate::quiver_from_json(read_json(file));
  const auto report = angulate::validate(q);
  if (!report.ok()) {
    std::cerr << report.describe();
    return kUsage;
  }
  if (!q.find(vertex)) {
    std::cerr << "unknown vertex '" << vertex << "'\n";
    return kUsage;
  }
  const auto result =
      angulate::mutate_path(q, angulate::MutationPath(static_cast<std::size_t>(times), angulate::VertexId(vertex)));
  write_text(output, angulate::quiver_to_json(result).dump(2) + "\n");
  return kPass;
}

int cmd_verify(const std::string& suite, angulate::SuiteOptions options, const std::string& quiver_file,
               const std::string& csv) {
  if (!quiver_file.empty()) {
    options.quiver = angulate::quiver_from_json(read_json(quiver_file));
    const auto report = angulate::validate(*options.quiver);
    if (!report.ok()) {
      std::cerr << report.describe();
      return kUsage;
    }
  }
  const auto report = angulate::run_suite(suite, options);
  std::cout << report.dump(2) << '\n';
  if (!csv.empty() && report.contains("csv")) write_text(csv, report.at("csv").get<std::string>());
  return angulate::suite_passed(report) ? kPass : kFail;
}

int cmd_render(const std::string& file, const std::string& svg, const std::string& dot, bool shade) {
  const auto a = angulate::angulation_from_json(read_json(file));
  if (svg.empty() && dot.empty()) {
    std::cerr << "nothing to do: pass --svg and/or --dot\n";
    return kUsage;
  }
  if (!svg.empty()) write_text(svg, angulate::angulation_to_svg(a, {.shade_cells = shade}));
  if (!dot.empty()) write_text(dot, angulate::quiver_to_dot(angulate::psi(a), "psi"));
  return kPass;
}

int cmd_serve(const std::string& host, int port, const std::string& save_dir) {
  angulate::SessionStore store(save_dir.empty() ? std::nullopt
                                                : std::optional<std::filesystem::path>(save_dir));
  httplib::Server server;
  angulate::register_routes(server, store);
  std::cerr << "listening on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return kFail;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured quivers, polygon angulations and braid group presentations"};
  app.require_subcommand(1);

  std::string file;
  std::string vertex;
  std::string output = "-";
  int times = 1;
  auto* mutate = app.add_subcommand("mutate", "Mutate a quiver file at a vertex");
  mutate->add_option("quiver", file, "Quiver JSON file")->required();
  mutate->add_option("vertex", vertex, "Vertex to mutate at")->required();
  mutate->add_option("--times,-t", times, "Number of mutations")->check(CLI::NonNegativeNumber);
  mutate->add_option("--output,-o", output, "Output file ('-' for stdout)");

  std::string suite;
  angulate::SuiteOptions options;
  std::uint64_t seed = 0;
  std::string quiver_file;
  std::string csv;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("--suite", suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"commutation", "colour-sums", "homomorphisms", "bijection", "order"}));
  verify->add_option("--n", options.n, "Polygon parameter n")->check(CLI::PositiveNumber);
  verify->add_option("--m", options.m, "Colour bound m")->check(CLI::PositiveNumber);
  auto* seed_option = verify->add_option("--seed", seed, "Seed for randomized cases");
  verify->add_option("--random", options.random, "Number of seeded random cases")->check(CLI::NonNegativeNumber);
  verify->add_option("--depth", options.depth, "Mutation ball radius")->check(CLI::NonNegativeNumber);
  verify->add_option("--quiver", quiver_file, "Quiver JSON file (order suite)");
  verify->add_option("--csv", csv, "Write the bijection CSV row here");

  std::string svg;
  std::string dot;
  bool shade = false;
  auto* render = app.add_subcommand("render", "Render an angulation file as SVG and its quiver as DOT");
  render->add_option("angulation", file, "Angulation JSON file")->required();
  render->add_option("--svg", svg, "SVG output file");
  render->add_option("--dot", dot, "DOT output file");
  render->add_flag("--shade", shade, "Shade the cells");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string save_dir;
  auto* serve = app.add_subcommand("serve", "Serve the HTTP session API");
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "Interface to bind");
  serve->add_option("--save-dir", save_dir, "Write each session's angulation here after every change");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*mutate) return cmd_mutate(file, vertex, times, output);
    if (*verify) {
      if (*seed_option) options.seed = seed;
      return cmd_verify(suite, options, quiver_file, csv);
    }
    if (*render) return cmd_render(file, svg, dot, shade);
    if (*serve) return cmd_serve(host, port, save_dir);
  } catch (const angulate::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const angulate::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
