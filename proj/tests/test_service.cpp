#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <thread>

#include <httplib.h>

#include "angulate/angulation_io.hpp"
#include "angulate/correspondence.hpp"
#include "angulate/quiver_io.hpp"
#include "angulate/service.hpp"

using namespace angulate;
using nlohmann::json;

TEST_CASE("session rotation, history and undo") {
  Session s("x", fan(3, 1));
  CHECK(s.rotate({1, 4}) == Diagonal(3, 5));
  CHECK(s.history().size() == 1);
  CHECK(s.current() == rotate(fan(3, 1), {1, 4}));
  CHECK_THROWS_AS(s.rotate({1, 4}), InvalidArgument);
  s.undo();
  CHECK(s.current() == fan(3, 1));
  CHECK(s.history().empty());
  CHECK_THROWS_AS(s.undo(), Conflict);
}

TEST_CASE("session state follows psi and replays from its history") {
  std::mt19937_64 rng(8);
  Session s("y", fan(5, 2));
  for (int step = 0; step < 30; ++step) {
    const auto ds = s.current().diagonals();
    s.rotate(ds[rng() % ds.size()]);
    const auto state = s.state();
    REQUIRE(state.at("quiver_hash") == quiver_hash(psi(s.current())));
    REQUIRE(quiver_from_json(state.at("quiver")) == psi(s.current()));
    Angulation replay = s.initial();
    for (const auto& h : state.at("history")) {
      const auto gamma = diagonal_from_json(h.at("diagonal"));
      REQUIRE(sigma(replay, gamma) == diagonal_from_json(h.at("sigma")));
      replay = rotate(replay, gamma);
    }
    REQUIRE(replay == s.current());
  }
}

TEST_CASE("session presentation uses chain labels") {
  Session s("z", fan(4, 1));
  CHECK(s.presentation() == standard_presentation(4));
  CHECK(s.labels().at({1, 3}) == 1);
  CHECK(s.labels().at({1, 5}) == 3);
  s.rotate({1, 4});
  // Still a presentation of the same quiver class, with labels 1..3.
  std::set<int> labels;
  for (const auto& [d, l] : s.labels()) labels.insert(l);
  CHECK(labels == std::set<int>{1, 2, 3});
  CHECK(s.presentation_json().at("text") == s.presentation().to_text());
}

TEST_CASE("session requests") {
  CHECK(session_request(json{{"n", 4}, {"m", 2}}) == fan(4, 2));
  const auto a = Angulation(5, 2, {{2, 5}, {5, 8}, {8, 11}, {2, 11}});
  CHECK(session_request(json{{"angulation", angulation_to_json(a)}}) == a);
  CHECK(session_request(angulation_to_json(a)) == a);
  CHECK_THROWS_AS(session_request(json::array()), ParseError);
  CHECK_THROWS_AS(session_request(json{{"n", "four"}}), ParseError);
  CHECK_THROWS_AS(session_request(json{{"n", 100}, {"m", 3}}), ParseError);
}

TEST_CASE("store persists sessions to the save directory") {
  const auto dir = std::filesystem::temp_directory_path() / "angulate_store_test";
  std::filesystem::remove_all(dir);
  SessionStore store(dir);
  const std::string id = store.create(fan(3, 2)).at("id");
  store.rotate(id, {1, 4});
  std::ifstream in(dir / (id + ".json"));
  REQUIRE(in);
  CHECK(angulation_from_json(json::parse(in)) == rotate(fan(3, 2), {1, 4}));
  CHECK(store.size() == 1);
  CHECK_THROWS_AS(store.state("nope"), NotFound);
  std::filesystem::remove_all(dir);
}

namespace {

struct Server {
  SessionStore store;
  httplib::Server http;
  std::thread thread;
  int port = 0;

  Server() {
    register_routes(http, store);
    port = http.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { http.listen_after_bind(); });
    http.wait_until_ready();
  }
  ~Server() {
    http.stop();
    thread.join();
  }
};

json body_of(const httplib::Result& r) { return json::parse(r->body); }

}  // namespace

TEST_CASE("HTTP session API") {
  Server server;
  httplib::Client client("127.0.0.1", server.port);

  auto created = client.Post("/sessions", R"({"n":3,"m":2})", "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const std::string id = body_of(created).at("id");
  const auto initial = body_of(created).at("state");
  CHECK(initial.at("angulation") == angulation_to_json(fan(3, 2)));

  SUBCASE("three rotations of one diagonal return to the start") {
    json diagonal = json::array({1, 4});
    for (int k = 0; k < 3; ++k) {
      auto r = client.Post("/sessions/" + id + "/rotate", json{{"diagonal", diagonal}}.dump(), "application/json");
      REQUIRE(r);
      REQUIRE(r->status == 200);
      diagonal = body_of(r).at("sigma");
    }
    const auto state = body_of(client.Get("/sessions/" + id));
    CHECK(state.at("angulation") == initial.at("angulation"));
    CHECK(state.at("quiver_hash") == initial.at("quiver_hash"));
    CHECK(state.at("history").size() == 3);
  }

  SUBCASE("undo") {
    client.Post("/sessions/" + id + "/rotate", R"({"diagonal":[1,6]})", "application/json");
    auto r = client.Post("/sessions/" + id + "/undo", "", "application/json");
    REQUIRE(r);
    CHECK(r->status == 200);
    CHECK(body_of(r).at("angulation") == initial.at("angulation"));
    CHECK(client.Post("/sessions/" + id + "/undo", "", "application/json")->status == 422);
  }

  SUBCASE("errors") {
    CHECK(client.Post("/sessions/" + id + "/rotate", R"({"diagonal":[2,5]})", "application/json")->status == 422);
    CHECK(client.Post("/sessions/" + id + "/rotate", R"({"diagonal":[1,3]})", "application/json")->status == 422);
    CHECK(client.Post("/sessions/" + id + "/rotate", R"({"diagonal":["a",4]})", "application/json")->status == 400);
    CHECK(client.Post("/sessions/" + id + "/rotate", "{not json", "application/json")->status == 400);
    CHECK(client.Post("/sessions/" + id + "/rotate", R"({"edge":[1,4]})", "application/json")->status == 400);
    CHECK(client.Get("/sessions/ffff")->status == 404);
    CHECK(client.Post("/sessions/ffff/rotate", R"({"diagonal":[1,4]})", "application/json")->status == 404);
    CHECK(client.Post("/sessions", R"({"n":2})", "application/json")->status == 400);
  }

  SUBCASE("svg and presentation") {
    auto svg = client.Get("/sessions/" + id + "/svg");
    REQUIRE(svg);
    CHECK(svg->status == 200);
    CHECK(svg->get_header_value("Content-Type") == "image/svg+xml");
    CHECK(svg->body.find("data-diagonal=\"(1,4)\"") != std::string::npos);

    auto text = client.Get("/sessions/" + id + "/presentation?format=text");
    REQUIRE(text);
    CHECK(text->body == standard_presentation(3).to_text());
    auto js = client.Get("/sessions/" + id + "/presentation");
    CHECK(body_of(js).at("generators").size() == 2);
  }
}

TEST_CASE("HTTP presentation of the linear quiver") {
  Server server;
  httplib::Client client("127.0.0.1", server.port);
  auto created = client.Post("/sessions", R"({"n":4,"m":1})", "application/json");
  const std::string id = body_of(created).at("id");
  auto text = client.Get("/sessions/" + id + "/presentation", {{"Accept", "text/plain"}});
  REQUIRE(text);
  CHECK(text->body ==
        "generators: s1 s2 s3\n"
        "s1 s3 = s3 s1\n"
        "s1 s2 s1 = s2 s1 s2\n"
        "s2 s3 s2 = s3 s2 s3\n");
}
