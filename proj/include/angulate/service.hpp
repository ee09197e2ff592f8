#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "angulate/angulation.hpp"
#include "angulate/coloured_quiver.hpp"
#include "angulate/error.hpp"
#include "angulate/presentation.hpp"

namespace httplib {
class Server;
}

namespace angulate {

class NotFound : public Error {
 public:
  using Error::Error;
};

/// Raised for a well-formed request the current state cannot honour (the
/// diagonal is not in the angulation, nothing left to undo).
class Conflict : public Error {
 public:
  using Error::Error;
};

struct HistoryEntry {
  Diagonal diagonal;
  Diagonal image;
};

/// One exploration: an initial angulation plus the rotations applied since.
/// Not synchronized; SessionStore serializes access per session.
class Session {
 public:
  Session(std::string id, Angulation initial);

  const std::string& id() const { return id_; }
  const Angulation& initial() const { return initial_; }
  const Angulation& current() const { return current_; }
  const std::vector<HistoryEntry>& history() const { return history_; }
  const ColouredQuiver& quiver() const { return quiver_; }
  const Presentation& presentation() const { return presentation_; }
  /// Diagonal -> generator label used by presentation().
  const std::map<Diagonal, int>& labels() const { return labels_; }

  /// Applies r_gamma and returns sigma(gamma). Throws InvalidArgument when
  /// gamma is not in the current angulation.
  Diagonal rotate(const Diagonal& gamma);
  /// Throws Conflict at the initial state.
  void undo();

  nlohmann::json state() const;
  nlohmann::json presentation_json() const;

 private:
  void refresh();

  std::string id_;
  Angulation initial_;
  Angulation current_;
  std::vector<HistoryEntry> history_;
  ColouredQuiver quiver_;
  Presentation presentation_;
  std::map<Diagonal, int> labels_;
};

/// 16 hex digits of a hash of the quiver's exact fingerprint.
std::string quiver_hash(const ColouredQuiver& q);

inline constexpr int kMaxSessionPolygon = 200;

/// In-memory sessions. The map is guarded by one mutex; each session by its
/// own, so requests on different sessions proceed concurrently.
class SessionStore {
 public:
  /// Sessions are also written to `save_dir`/<id>.json after every change
  /// when a directory is given.
  explicit SessionStore(std::optional<std::filesystem::path> save_dir = std::nullopt);

  nlohmann::json create(const Angulation& initial);
  nlohmann::json state(const std::string& id);
  /// State after the rotation, with "sigma" holding the image diagonal.
  nlohmann::json rotate(const std::string& id, const Diagonal& gamma);
  nlohmann::json undo(const std::string& id);
  std::string svg(const std::string& id);
  nlohmann::json presentation(const std::string& id);
  std::size_t size() const;

 private:
  struct Slot {
    std::mutex mutex;
    std::unique_ptr<Session> session;
  };

  std::shared_ptr<Slot> find(const std::string& id) const;
  std::string fresh_id();
  void save(const Session& session) const;

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::mt19937_64 rng_;
  std::optional<std::filesystem::path> save_dir_;
};

/// Parses a POST /sessions body: {"n", "m"} for the fan, or an angulation
/// under "angulation", or an angulation object itself. Throws ParseError.
Angulation session_request(const nlohmann::json& body);

/// Installs the HTTP endpoints on `server`. 404 unknown session, 422 for a
/// diagonal outside the angulation or nothing to undo, 400 malformed input.
void register_routes(httplib::Server& server, SessionStore& store);

}  // namespace angulate
