#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "angulate/angulation.hpp"
#include "angulate/angulation_io.hpp"
#include "angulate/error.hpp"
#include "oracles.hpp"

using namespace angulate;

namespace {

Angulation central_square() { return Angulation(5, 2, {{2, 5}, {5, 8}, {8, 11}, {2, 11}}); }

}  // namespace

TEST_CASE("m-diagonal membership") {
  CHECK(is_m_diagonal(5, 2, {1, 4}));
  CHECK_FALSE(is_m_diagonal(5, 2, {1, 3}));
  CHECK(is_m_diagonal(2, 2, {1, 4}));
  CHECK_FALSE(is_m_diagonal(2, 2, {1, 2}));
  CHECK(is_m_diagonal(5, 2, {2, 11}));
  CHECK_THROWS_AS(is_m_diagonal(5, 2, {1, 13}), InvalidArgument);
  CHECK_THROWS_AS(is_m_diagonal(5, 2, {0, 4}), InvalidArgument);
}

TEST_CASE("diagonals are normalized and unordered") {
  CHECK(Diagonal(4, 1) == Diagonal(1, 4));
  CHECK(Diagonal(7, 2).name() == "(2,7)");
  CHECK_THROWS_AS(Diagonal(3, 3), InvalidArgument);
}

TEST_CASE("intersection is strict interleaving") {
  CHECK(intersects({1, 4}, {2, 5}));
  CHECK(intersects({2, 5}, {1, 4}));
  CHECK_FALSE(intersects({1, 4}, {4, 7}));
  CHECK_FALSE(intersects({2, 5}, {8, 11}));
  CHECK_FALSE(intersects({1, 10}, {4, 7}));
}

TEST_CASE("angulation validation") {
  CHECK_NOTHROW(Angulation(2, 2, {{1, 4}}));
  CHECK_THROWS_AS(Angulation(2, 2, {}), InvalidArgument);
  CHECK_THROWS_AS(Angulation(3, 2, {{1, 4}, {2, 5}}), InvalidArgument);
  CHECK_THROWS_AS(Angulation(3, 2, {{1, 4}, {1, 4}}), InvalidArgument);
  CHECK_THROWS_AS(Angulation(3, 2, {{1, 3}, {1, 6}}), InvalidArgument);
  CHECK_THROWS_AS(Angulation(0, 2, {}), InvalidArgument);
}

TEST_CASE("cells of small angulations") {
  const auto hex = cells(Angulation(2, 2, {{1, 4}}));
  REQUIRE(hex.size() == 2);
  CHECK(hex[0].vertices == std::vector<int>{1, 2, 3, 4});
  CHECK(hex[1].vertices == std::vector<int>{1, 4, 5, 6});

  const auto square = cells(central_square());
  REQUIRE(square.size() == 5);
  const bool has_centre =
      std::any_of(square.begin(), square.end(), [](const Cell& c) { return c.vertices == std::vector<int>{2, 5, 8, 11}; });
  CHECK(has_centre);

  for (const auto& c : cells(fan(5, 2))) CHECK(c.vertices.front() == 1);
}

TEST_CASE("cells partition the polygon") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 1}, {3, 2}, {5, 2}, {3, 3}, {4, 3}}) {
    for (const auto& a : enumerate_angulations(n, m)) {
      const auto cs = cells(a);
      REQUIRE(cs.size() == static_cast<std::size_t>(n));
      std::map<Diagonal, int> diagonal_uses;
      std::map<int, int> edge_uses;
      for (const auto& c : cs) {
        REQUIRE(c.sides.size() == static_cast<std::size_t>(m + 2));
        for (const auto& s : c.sides) {
          if (s.kind == SideKind::Diagonal)
            ++diagonal_uses[Diagonal(s.from, s.to)];
          else {
            const int size = a.polygon_size();
            REQUIRE(((s.to - s.from + size) % size == 1 || (s.from - s.to + size) % size == 1));
            ++edge_uses[std::min(s.from, s.to) == 1 && std::max(s.from, s.to) == size ? size : std::min(s.from, s.to)];
          }
        }
      }
      for (const auto& d : a.diagonals()) REQUIRE(diagonal_uses[d] == 2);
      REQUIRE(edge_uses.size() == static_cast<std::size_t>(a.polygon_size()));
      for (const auto& [e, uses] : edge_uses) REQUIRE(uses == 1);
    }
  }
}

TEST_CASE("the polygon around a diagonal") {
  CHECK(p_gamma(Angulation(2, 2, {{1, 4}}), {1, 4}).vertices == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(p_gamma(central_square(), {2, 5}).vertices == std::vector<int>{2, 3, 4, 5, 8, 11});
  CHECK(p_gamma(fan(3, 1), {1, 3}).vertices == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(p_gamma(fan(3, 1), {2, 4}), InvalidArgument);
}

TEST_CASE("rotation in the hexagon and the square") {
  auto a = Angulation(2, 2, {{1, 4}});
  a = rotate(a, {1, 4});
  CHECK(a.diagonals() == std::vector<Diagonal>{{3, 6}});
  a = rotate(a, {3, 6});
  CHECK(a.diagonals() == std::vector<Diagonal>{{2, 5}});
  a = rotate(a, {2, 5});
  CHECK(a.diagonals() == std::vector<Diagonal>{{1, 4}});

  CHECK(rotate(Angulation(2, 1, {{1, 3}}), {1, 3}).diagonals() == std::vector<Diagonal>{{2, 4}});
  CHECK_THROWS_AS(rotate(fan(3, 1), {2, 4}), InvalidArgument);
}

TEST_CASE("rotation has order m+1 and permutes the angulations") {
  for (int m = 1; m <= 10; ++m) {
    for (int n = 2; n * m + 2 <= 12; ++n) {
      const auto all = enumerate_angulations(n, m);
      const std::set<Angulation> set(all.begin(), all.end());
      for (const auto& a : all) {
        for (const auto& gamma : a.diagonals()) {
          const auto once = rotate(a, gamma);
          REQUIRE(set.count(once));
          const auto back = rotate_times(a, gamma, m + 1);
          REQUIRE(back.first == a);
          REQUIRE(back.second == gamma);
          REQUIRE(sigma(a, gamma) == sigma(a, gamma, cells(a)));
        }
        REQUIRE(set.count(rotate_polygon(a)));
      }
    }
  }
}

TEST_CASE("distances") {
  for (int d : distances(fan(6, 2))) CHECK(d == 0);
  CHECK(distances(Angulation(2, 2, {{3, 6}})) == std::vector<int>{1});

  // delta = (1,4), sigma(gamma) = (1,10), epsilon = (5,10), zeta = (7,10).
  const Angulation a(5, 2, {{1, 4}, {1, 10}, {5, 10}, {7, 10}});
  CHECK(distance(a, {1, 4}) == 0);
  CHECK(distance(a, {1, 10}) == 0);
  CHECK(distance(a, {5, 10}) == 1);
  CHECK(distance(a, {7, 10}) == 2);
  CHECK_THROWS_AS(distance(a, {2, 5}), InvalidArgument);
}

TEST_CASE("reduction to the fan") {
  CHECK(reduce_to_fan(fan(5, 2)).empty());

  const Angulation hex(2, 2, {{3, 6}});
  const auto path = reduce_to_fan(hex);
  REQUIRE(path.size() == 1);
  CHECK(path[0] == RotationStep{{3, 6}, 2});

  const auto square_path = reduce_to_fan(central_square());
  CHECK(square_path.size() <= 4);
  CHECK(apply_rotations(central_square(), square_path) == fan(5, 2));
}

TEST_CASE("reduction paths replay and invert") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 1}, {6, 1}, {4, 2}, {5, 2}, {3, 3}, {4, 3}, {3, 4}}) {
    for (const auto& a : enumerate_angulations(n, m)) {
      const auto path = reduce_to_fan(a);
      REQUIRE(path.size() <= static_cast<std::size_t>(n - 1));
      REQUIRE(apply_rotations(a, path) == fan(n, m));
      REQUIRE(apply_rotations(fan(n, m), invert_rotations(a, path)) == a);
    }
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_angulation(8, 3, rng);
    REQUIRE(apply_rotations(a, reduce_to_fan(a)) == fan(8, 3));
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_angulations(4, 1).size() == 14);
  CHECK(enumerate_angulations(2, 2).size() == 3);
  CHECK(enumerate_angulations(3, 2).size() == 12);
  CHECK(fuss_catalan(4, 1) == 14);
  CHECK(fuss_catalan(2, 2) == 3);
  CHECK(fuss_catalan(3, 2) == 12);
  CHECK(fuss_catalan(12, 1) == 208012);
}

TEST_CASE("enumeration matches brute force and the closed form") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n * m + 2 <= 12; ++n) {
      const auto listed = enumerate_angulations(n, m);
      REQUIRE(listed.size() == fuss_catalan(n, m));
      if (n * m + 2 > 10) continue;
      std::set<std::vector<Diagonal>> brute;
      for (auto& d : oracle::brute_force_angulations(n, m)) brute.insert(d);
      std::set<std::vector<Diagonal>> mine;
      for (const auto& a : listed) mine.insert(a.diagonals());
      REQUIRE(brute == mine);
    }
  }
  CHECK_THROWS_AS(enumerate_angulations(10, 2), BudgetExceeded);
}

TEST_CASE("angulation JSON round trip") {
  const auto a = central_square();
  const auto j = angulation_to_json(a);
  CHECK(j.dump() == R"({"diagonals":[[2,5],[2,11],[5,8],[8,11]],"m":2,"n":5})");
  CHECK(angulation_from_json(j) == a);
  CHECK_THROWS_AS(angulation_from_json(nlohmann::json::parse(R"({"n":5})")), ParseError);
  CHECK_THROWS_AS(angulation_from_json(nlohmann::json::parse(R"({"n":2,"m":2,"diagonals":[[1,3]]})")), ParseError);
}

TEST_CASE("SVG layout") {
  const auto svg = angulation_to_svg(fan(5, 2));
  CHECK(svg == angulation_to_svg(fan(5, 2)));
  std::size_t chords = 0;
  for (auto pos = svg.find("class=\"diagonal\""); pos != std::string::npos;
       pos = svg.find("class=\"diagonal\"", pos + 1))
    ++chords;
  CHECK(chords == 4);
  // Every chord of the fan starts at the top vertex.
  CHECK(svg.find("data-diagonal=\"(1,4)\" x1=\"0.0000\" y1=\"-1.0000\"") != std::string::npos);

  // The central square is inscribed: its corners sit at quarter turns.
  const auto square = angulation_to_svg(central_square());
  CHECK(square.find("data-diagonal=\"(2,5)\" x1=\"0.5000\" y1=\"-0.8660\" x2=\"0.8660\" y2=\"0.5000\"") !=
        std::string::npos);
  CHECK(angulation_to_svg(central_square(), {.shade_cells = true}).find("class=\"cell\"") != std::string::npos);
}
