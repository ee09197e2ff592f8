#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "angulate/angulation_io.hpp"
#include "angulate/quiver_io.hpp"
#include "helpers.hpp"

using namespace angulate;
using testing_helpers::quiver;
namespace fs = std::filesystem;

namespace {

const fs::path& scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "angulate_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path;
}

std::string read(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const std::string command = std::string(ANGULATE_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(command.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read(out)};
}

}  // namespace

TEST_CASE("mutate") {
  const auto a3 = write("a3.json", quiver_to_json(a_quiver(4, 1)).dump());

  auto twice = run("mutate " + a3.string() + " 2 --times 2");
  CHECK(twice.code == 0);
  CHECK(quiver_from_json(nlohmann::json::parse(twice.out)) == a_quiver(4, 1));

  auto none = run("mutate " + a3.string() + " 2 --times 0");
  CHECK(none.code == 0);
  CHECK(quiver_from_json(nlohmann::json::parse(none.out)) == a_quiver(4, 1));

  const auto example = write("example.json", quiver_to_json(quiver(2, 3, {{1, 2, 1}, {2, 3, 0}, {1, 3, 2}})).dump());
  const auto out = scratch() / "mutated.json";
  CHECK(run("mutate " + example.string() + " 2 -o " + out.string()).code == 0);
  CHECK(quiver_from_json(nlohmann::json::parse(read(out))) == quiver(2, 3, {{1, 2, 2}, {2, 3, 2}}));

  CHECK(run("mutate " + a3.string() + " 9").code == 2);
  CHECK(run("mutate " + (scratch() / "missing.json").string() + " 1").code == 2);
  const auto broken = write("broken.json", R"({"m":1,"vertices":[1,2],"arrows":[{"from":1,"to":2,"colour":0}]})");
  CHECK(run("mutate " + broken.string() + " 1").code == 2);
  CHECK(run("mutate " + write("garbage.json", "{").string() + " 1").code == 2);
}

TEST_CASE("verify") {
  auto commutation = run("verify --suite commutation --n 5 --m 2");
  CHECK(commutation.code == 0);
  CHECK(nlohmann::json::parse(commutation.out).at("status") == "pass");

  const auto cycle = write("cycle.json", quiver_to_json(quiver(2, 3, {{1, 2, 0}, {2, 3, 0}, {1, 3, 2}})).dump());
  auto order = run("verify --suite order --quiver " + cycle.string());
  CHECK(order.code == 1);
  const auto report = nlohmann::json::parse(order.out);
  CHECK(report.at("status") == "fail");
  CHECK(report.at("failures").size() >= 1);
  CHECK(run("verify --suite order --n 4 --m 2").code == 0);

  const auto csv = scratch() / "bijection.csv";
  auto bijection = run("verify --suite bijection --n 3 --m 2 --csv " + csv.string());
  CHECK(bijection.code == 0);
  CHECK(nlohmann::json::parse(bijection.out).at("angulations") == 12);
  CHECK(read(csv).find("3,2,12,2,2") != std::string::npos);

  CHECK(run("verify --suite commutation --n 4 --m 2 --random 5 --seed 1").code == 0);
  CHECK(run("verify --suite commutation --random 5").code == 2);
  CHECK(run("verify --suite nonsense").code == 2);
}

TEST_CASE("render") {
  const auto a = write("square.json", R"({"n":5,"m":2,"diagonals":[[2,5],[5,8],[8,11],[2,11]]})");
  const auto svg1 = scratch() / "one.svg";
  const auto svg2 = scratch() / "two.svg";
  const auto dot = scratch() / "q.dot";
  CHECK(run("render " + a.string() + " --svg " + svg1.string() + " --dot " + dot.string()).code == 0);
  CHECK(run("render " + a.string() + " --svg " + svg2.string()).code == 0);
  CHECK(read(svg1) == read(svg2));
  CHECK(read(svg1) == angulation_to_svg(angulation_from_json(nlohmann::json::parse(read(a)))));
  CHECK(read(dot).find("digraph") != std::string::npos);
  CHECK(run("render " + a.string()).code == 2);
  CHECK(run("render " + write("bad.json", R"({"n":5,"m":2,"diagonals":[[1,3]]})").string() + " --svg -").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("mutate").code == 2);
  CHECK(run("--help").code == 0);
}
