#include "angulate/service.hpp"

#include <cstdio>
#include <fstream>
#include <functional>

#include <httplib.h>

#include "angulate/angulation_io.hpp"
#include "angulate/correspondence.hpp"
#include "angulate/quiver_io.hpp"

namespace angulate {

std::string quiver_hash(const ColouredQuiver& q) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(std::hash<std::string>{}(fingerprint(q))));
  return buffer;
}

Session::Session(std::string id, Angulation initial)
    : id_(std::move(id)), initial_(initial), current_(std::move(initial)) {
  refresh();
}

void Session::refresh() {
  quiver_ = psi(current_);
  const ChainLabelling chain = chain_labelling(current_);
  labels_ = chain.labels;
  presentation_ = presentation_of(relabel(quiver_, chain.renaming()));
}

Diagonal Session::rotate(const Diagonal& gamma) {
  if (!current_.contains(gamma))
    throw InvalidArgument(gamma.name() + " is not a diagonal of the current angulation");
  const Diagonal image = sigma(current_, gamma);
  current_ = angulate::rotate(current_, gamma);
  history_.push_back({gamma, image});
  refresh();
  return image;
}

void Session::undo() {
  if (history_.empty()) throw Conflict("nothing to undo");
  // r_gamma has order m+1, so m more rotations at the image undo it.
  const auto last = history_.back();
  current_ = rotate_times(current_, last.image, current_.m()).first;
  history_.pop_back();
  refresh();
}

nlohmann::json Session::presentation_json() const {
  nlohmann::json out = presentation_.to_json();
  out["text"] = presentation_.to_text();
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [d, label] : labels_) labels[d.name()] = label;
  out["labels"] = std::move(labels);
  return out;
}

nlohmann::json Session::state() const {
  nlohmann::json history = nlohmann::json::array();
  for (const auto& h : history_)
    history.push_back({{"diagonal", diagonal_to_json(h.diagonal)}, {"sigma", diagonal_to_json(h.image)}});
  return {{"id", id_},
          {"angulation", angulation_to_json(current_)},
          {"initial", angulation_to_json(initial_)},
          {"quiver", quiver_to_json(quiver_)},
          {"quiver_hash", quiver_hash(quiver_)},
          {"presentation", presentation_json()},
          {"history", std::move(history)}};
}

SessionStore::SessionStore(std::optional<std::filesystem::path> save_dir)
    : rng_(std::random_device{}()), save_dir_(std::move(save_dir)) {
  if (save_dir_) std::filesystem::create_directories(*save_dir_);
}

std::string SessionStore::fresh_id() {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(rng_()));
  return buffer;
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw NotFound("unknown session '" + id + "'");
  return it->second;
}

void SessionStore::save(const Session& session) const {
  if (!save_dir_) return;
  std::ofstream out(*save_dir_ / (session.id() + ".json"));
  out << angulation_to_json(session.current()).dump(2) << '\n';
}

nlohmann::json SessionStore::create(const Angulation& initial) {
  if (initial.polygon_size() > kMaxSessionPolygon)
    throw InvalidArgument("sessions are limited to polygons with at most " +
                          std::to_string(kMaxSessionPolygon) + " vertices");
  auto slot = std::make_shared<Slot>();
  std::string id;
  {
    std::lock_guard lock(mutex_);
    do id = fresh_id();
    while (sessions_.count(id));
    sessions_[id] = slot;
  }
  std::lock_guard lock(slot->mutex);
  slot->session = std::make_unique<Session>(id, initial);
  save(*slot->session);
  return slot->session->state();
}

nlohmann::json SessionStore::state(const std::string& id) {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  if (!slot->session) throw NotFound("unknown session '" + id + "'");
  return slot->session->state();
}

nlohmann::json SessionStore::rotate(const std::string& id, const Diagonal& gamma) {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  if (!slot->session) throw NotFound("unknown session '" + id + "'");
  const Diagonal image = slot->session->rotate(gamma);
  save(*slot->session);
  nlohmann::json out = slot->session->state();
  out["sigma"] = diagonal_to_json(image);
  return out;
}

nlohmann::json SessionStore::undo(const std::string& id) {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  if (!slot->session) throw NotFound("unknown session '" + id + "'");
  slot->session->undo();
  save(*slot->session);
  return slot->session->state();
}

std::string SessionStore::svg(const std::string& id) {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  if (!slot->session) throw NotFound("unknown session '" + id + "'");
  return angulation_to_svg(slot->session->current(), {.shade_cells = true});
}

nlohmann::json SessionStore::presentation(const std::string& id) {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  if (!slot->session) throw NotFound("unknown session '" + id + "'");
  return slot->session->presentation_json();
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

Angulation session_request(const nlohmann::json& body) {
  if (!body.is_object()) throw ParseError("request body must be a JSON object");
  if (body.contains("angulation")) return angulation_from_json(body.at("angulation"));
  if (body.contains("diagonals")) return angulation_from_json(body);
  try {
    const int n = body.at("n").get<int>();
    const int m = body.at("m").get<int>();
    if (n < 1 || m < 1) throw ParseError("n and m must be at least 1");
    if (n * m + 2 > kMaxSessionPolygon) throw ParseError("polygon too large for a session");
    return fan(n, m);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("expected {\"n\", \"m\"} or an angulation: ") + e.what());
  }
}

namespace {

void send_json(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void guarded(httplib::Response& res, const std::function<void()>& handler) {
  try {
    handler();
  } catch (const NotFound& e) {
    send_json(res, 404, {{"error", e.what()}});
  } catch (const ParseError& e) {
    send_json(res, 400, {{"error", e.what()}});
  } catch (const nlohmann::json::exception& e) {
    send_json(res, 400, {{"error", e.what()}});
  } catch (const Conflict& e) {
    send_json(res, 422, {{"error", e.what()}});
  } catch (const InvalidArgument& e) {
    send_json(res, 422, {{"error", e.what()}});
  } catch (const std::exception& e) {
    send_json(res, 500, {{"error", e.what()}});
  }
}

nlohmann::json parse_body(const httplib::Request& req) {
  auto body = nlohmann::json::parse(req.body, nullptr, false);
  if (body.is_discarded()) throw ParseError("request body is not valid JSON");
  return body;
}

}  // namespace

void register_routes(httplib::Server& server, SessionStore& store) {
  server.Post("/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const Angulation initial = session_request(parse_body(req));
      nlohmann::json state = store.create(initial);
      const std::string id = state.at("id");
      send_json(res, 201, {{"id", id}, {"state", std::move(state)}});
    });
  });
  server.Get(R"(/sessions/([^/]+))", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 200, store.state(req.matches[1])); });
  });
  server.Post(R"(/sessions/([^/]+)/rotate)", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const std::string id = req.matches[1];
      const auto body = parse_body(req);
      if (!body.is_object() || !body.contains("diagonal"))
        throw ParseError("expected {\"diagonal\": [i, j]}");
      const Diagonal gamma = diagonal_from_json(body.at("diagonal"));
      send_json(res, 200, store.rotate(id, gamma));
    });
  });
  server.Post(R"(/sessions/([^/]+)/undo)", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send_json(res, 200, store.undo(req.matches[1])); });
  });
  server.Get(R"(/sessions/([^/]+)/svg)", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { res.set_content(store.svg(req.matches[1]), "image/svg+xml"); });
  });
  server.Get(R"(/sessions/([^/]+)/presentation)",
             [&store](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] {
                 const auto body = store.presentation(req.matches[1]);
                 const bool text = req.get_param_value("format") == "text" ||
                                   req.get_header_value("Accept") == "text/plain";
                 if (text)
                   res.set_content(body.at("text").get<std::string>(), "text/plain");
                 else
                   send_json(res, 200, body);
               });
             });
}

}  // namespace angulate
