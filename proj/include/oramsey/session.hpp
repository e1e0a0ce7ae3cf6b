#pragma once

#include <chrono>
#include <condition_variable>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oramsey/bounds.hpp"
#include "oramsey/match.hpp"
#include "oramsey/registry.hpp"

namespace oramsey {

// Rejected session request. `status` is the HTTP status the server answers with.
class ProtocolError : public Error {
 public:
  ProtocolError(int status, const std::string& message) : Error(message), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

enum class Role : std::uint8_t { builder, painter };

inline const char* role_name(Role r) { return r == Role::builder ? "builder" : "painter"; }

inline nlohmann::json bound_to_json(const BoundReport& r) {
  return {{"name", r.name},
          {"kind", bound_kind_name(r.kind)},
          {"quantity", r.quantity},
          {"value", std::to_string(r.value.numerator()) + "/" + std::to_string(r.value.denominator())},
          {"integer_view", r.integer_view},
          {"cite", r.cite},
          {"assumptions", r.assumptions}};
}

struct SessionConfig {
  std::string red_spec;
  std::string blue_spec;
  Role human = Role::painter;
  std::string engine;  // strategy for the other role
  StrategyParams params;
};

namespace detail {

inline std::optional<int> optional_int(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) throw ProtocolError(400, std::string("\"") + key + "\" must be an integer");
  return it->get<int>();
}

inline std::string required_string(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) throw ProtocolError(400, std::string("\"") + key + "\" must be a string");
  return it->get<std::string>();
}

}  // namespace detail

// {red, blue, human_role, engine, params, seed}; engine defaults to the clique
// builder or the degree-threshold painter.
inline SessionConfig session_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ProtocolError(400, "session request must be a JSON object");
  SessionConfig c;
  c.red_spec = detail::required_string(j, "red");
  c.blue_spec = detail::required_string(j, "blue");
  const std::string role = j.contains("human_role") ? detail::required_string(j, "human_role") : "painter";
  if (role == "painter") {
    c.human = Role::painter;
  } else if (role == "builder") {
    c.human = Role::builder;
  } else {
    throw ProtocolError(400, "human_role must be \"builder\" or \"painter\"");
  }
  c.engine = j.contains("engine") ? detail::required_string(j, "engine")
                                  : (c.human == Role::painter ? "builder:clique" : "painter:degree-threshold");
  if (auto it = j.find("params"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw ProtocolError(400, "params must be an object");
    c.params.k = detail::optional_int(*it, "k");
    c.params.n = detail::optional_int(*it, "n");
    c.params.block = detail::optional_int(*it, "block");
    c.params.board = detail::optional_int(*it, "board");
    c.params.room = detail::optional_int(*it, "room");
    c.params.max_vertices = detail::optional_int(*it, "max_vertices");
  }
  if (auto it = j.find("seed"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer()) throw ProtocolError(400, "seed must be an integer");
    c.params.seed = it->get<std::uint64_t>();
  }
  return c;
}

// One human-versus-engine game. Not thread-safe; SessionManager serializes
// access per session.
//
// Human painter: the engine builder proposes, the human sends {"color"}.
// Human builder: the human sends {"u_rank", "v_rank"} and optionally
// {"place": "left" | "right" | "between", "after": rank} to insert a fresh
// vertex first (ranks in the same body refer to the board after that
// insertion); the engine painter answers at once. A body with only "place"
// adds a vertex without using a turn.
//
// The event log holds the initial state and one state per coloured edge.
class Session {
 public:
  Session(std::string id, SessionConfig config) : id_(std::move(id)), config_(std::move(config)), state_(parse(config_)) {
    if (config_.human == Role::painter) {
      builder_ = make_builder(config_.engine, state_.red_target(), state_.blue_target(), config_.params);
      engine_propose(state_, *builder_);
    } else {
      painter_ = make_painter(config_.engine, config_.params);
    }
    record();
  }

  const std::string& id() const noexcept { return id_; }
  const GameState& game() const noexcept { return state_; }
  const std::vector<nlohmann::json>& events() const noexcept { return events_; }
  bool human_to_move() const { return !state_.over() && !engine_failed_; }

  // Applies a human move; on any error the session is unchanged.
  void move(const nlohmann::json& body) {
    if (!body.is_object()) throw ProtocolError(400, "move must be a JSON object");
    if (state_.over()) throw ProtocolError(409, "game is over");
    if (engine_failed_) throw ProtocolError(409, "engine stopped: " + engine_error_);
    const int turns = state_.turns();
    if (config_.human == Role::painter) {
      human_paint(body);
    } else {
      human_build(body);
    }
    if (state_.turns() != turns || !human_to_move()) record();
  }

  nlohmann::json state_json() const {
    nlohmann::json j = transcript_to_json(make_transcript(state_, config_.red_spec, config_.blue_spec, seed()));
    j["id"] = id_;
    j["human_role"] = role_name(config_.human);
    j["engine"] = config_.engine;
    j["board_size"] = state_.board().size();
    if (const auto& p = state_.pending()) {
      j["pending"] = {state_.board().rank(p->u), state_.board().rank(p->v)};
    } else {
      j["pending"] = nullptr;
    }
    j["to_move"] = human_to_move() ? nlohmann::json("human") : nlohmann::json(nullptr);
    j["engine_error"] = engine_failed_ ? nlohmann::json(engine_error_) : nlohmann::json(nullptr);
    nlohmann::json bounds = nlohmann::json::array();
    for (const BoundReport& r : applicable_bounds(state_.red_target(), state_.blue_target())) bounds.push_back(bound_to_json(r));
    j["bounds"] = std::move(bounds);
    return j;
  }

 private:
  static GameState parse(const SessionConfig& c) {
    try {
      return GameState(parse_graph_spec(c.red_spec), parse_graph_spec(c.blue_spec));
    } catch (const ParseError& e) {
      throw ProtocolError(400, e.what());
    }
  }

  std::optional<std::uint64_t> seed() const {
    if (painter_) return painter_->seed();
    return std::nullopt;
  }

  // Engine builder proposes on `s`; a strategy failure stops the session
  // instead of failing the request that triggered it.
  void engine_propose(GameState& s, BuilderStrategy& b) {
    if (s.over()) return;
    try {
      const BoardEdge e = b.next_move(s);
      if (!s.over()) s.propose_edge(e.u, e.v);
    } catch (const Error& e) {
      engine_failed_ = true;
      engine_error_ = e.what();
    }
  }

  void human_paint(const nlohmann::json& body) {
    if (body.contains("u_rank") || body.contains("place")) throw ProtocolError(409, "the human plays painter; send a colour");
    const auto it = body.find("color");
    if (it == body.end()) throw ProtocolError(400, "painter move needs \"color\"");
    const Color c = parse_color(*it);
    if (!state_.pending()) throw ProtocolError(409, "no move is pending");
    GameState next = state_;
    std::unique_ptr<BuilderStrategy> b = builder_->clone();
    next.paint(*next.pending(), c);
    engine_propose(next, *b);
    state_ = std::move(next);
    builder_ = std::move(b);
  }

  void human_build(const nlohmann::json& body) {
    if (body.contains("color")) throw ProtocolError(409, "the human plays builder; the engine paints");
    const auto u = detail::optional_int(body, "u_rank");
    const auto v = detail::optional_int(body, "v_rank");
    const bool placing = body.contains("place") && !body["place"].is_null();
    if (u.has_value() != v.has_value() || (!u && !placing)) {
      throw ProtocolError(400, "builder move needs \"u_rank\" and \"v_rank\", \"place\", or both");
    }
    GameState next = state_;
    std::unique_ptr<PainterStrategy> p = painter_->clone();
    if (auto it = body.find("place"); it != body.end() && !it->is_null()) {
      if (!it->is_string()) throw ProtocolError(400, "place must be \"left\", \"right\" or \"between\"");
      const std::string place = it->get<std::string>();
      if (place == "left") {
        next.new_vertex(Placement::leftmost());
      } else if (place == "right") {
        next.new_vertex(Placement::rightmost());
      } else if (place == "between") {
        const auto after = detail::optional_int(body, "after");
        const int size = next.board().size();
        if (!after || *after < 0 || *after > size) throw ProtocolError(400, "between needs \"after\" in 0..board size");
        if (*after == 0) {
          next.new_vertex(Placement::leftmost());
        } else if (*after == size) {
          next.new_vertex(Placement::rightmost());
        } else {
          next.new_vertex(Placement::between(next.board().at_rank(*after), next.board().at_rank(*after + 1)));
        }
      } else {
        throw ProtocolError(400, "place must be \"left\", \"right\" or \"between\"");
      }
    }
    if (u && !next.over()) {
      const int size = next.board().size();
      if (*u < 1 || *v < 1 || *u > size || *v > size) throw ProtocolError(409, "rank outside the board");
      PendingMove token;
      try {
        token = next.propose_edge(next.board().at_rank(*u), next.board().at_rank(*v));
      } catch (const GameError& e) {
        throw ProtocolError(409, e.what());
      }
      Color c;
      try {
        c = p->choose_color(next, token.u, token.v);
      } catch (const Error& e) {
        engine_failed_ = true;
        engine_error_ = e.what();
        return;  // the human's proposal stays unpainted; the session stops
      }
      next.paint(token, c);
    }
    state_ = std::move(next);
    painter_ = std::move(p);
  }

  static Color parse_color(const nlohmann::json& j) {
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      if (s == "r" || s == "red") return Color::red;
      if (s == "b" || s == "blue") return Color::blue;
    }
    throw ProtocolError(400, "color must be \"r\" or \"b\"");
  }

  void record() { events_.push_back(state_json()); }

  std::string id_;
  SessionConfig config_;
  GameState state_;
  std::unique_ptr<BuilderStrategy> builder_;
  std::unique_ptr<PainterStrategy> painter_;
  bool engine_failed_ = false;
  std::string engine_error_;
  std::vector<nlohmann::json> events_;
};

// Thread-safe registry of sessions. Requests on one session are serialized;
// different sessions proceed independently.
class SessionManager {
 public:
  nlohmann::json create(const nlohmann::json& body) {
    SessionConfig config = session_config_from_json(body);
    std::string id;
    {
      std::lock_guard lock(mutex_);
      id = "s" + std::to_string(++counter_);
    }
    auto entry = std::make_shared<Entry>();
    try {
      entry->session = std::make_unique<Session>(id, std::move(config));
    } catch (const ProtocolError&) {
      throw;
    } catch (const Error& e) {
      throw ProtocolError(400, e.what());
    }
    nlohmann::json state = entry->session->state_json();
    {
      std::lock_guard lock(mutex_);
      sessions_[id] = entry;
    }
    return {{"id", id}, {"state", std::move(state)}};
  }

  nlohmann::json get(const std::string& id) const {
    auto e = find(id);
    std::lock_guard lock(e->mutex);
    return e->session->state_json();
  }

  nlohmann::json move(const std::string& id, const nlohmann::json& body) {
    auto e = find(id);
    nlohmann::json state;
    {
      std::lock_guard lock(e->mutex);
      e->session->move(body);
      state = e->session->state_json();
    }
    e->changed.notify_all();
    return state;
  }

  // Events from index `from` on, waiting up to `timeout` for at least one.
  // `finished` is set once the session can produce no further events.
  std::vector<nlohmann::json> events(const std::string& id, std::size_t from, std::chrono::milliseconds timeout,
                                     bool* finished = nullptr) const {
    auto e = find(id);
    std::unique_lock lock(e->mutex);
    e->changed.wait_for(lock, timeout, [&] { return e->session->events().size() > from; });
    const auto& all = e->session->events();
    std::vector<nlohmann::json> out;
    for (std::size_t i = from; i < all.size(); ++i) out.push_back(all[i]);
    if (finished != nullptr) *finished = !e->session->human_to_move();
    return out;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return sessions_.size();
  }

 private:
  struct Entry {
    mutable std::mutex mutex;
    mutable std::condition_variable changed;
    std::unique_ptr<Session> session;
  };

  std::shared_ptr<Entry> find(const std::string& id) const {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw ProtocolError(404, "no session '" + id + "'");
    return it->second;
  }

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t counter_ = 0;
};

}  // namespace oramsey
