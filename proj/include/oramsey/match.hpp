#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oramsey/game.hpp"
#include "oramsey/strategy.hpp"

namespace oramsey {

struct TranscriptMove {
  int u_rank = 0;  // final board ranks, u_rank < v_rank
  int v_rank = 0;
  Color color = Color::red;

  friend bool operator==(const TranscriptMove&, const TranscriptMove&) = default;
};

struct Transcript {
  std::string red_spec;
  std::string blue_spec;
  std::optional<std::uint64_t> seed;
  std::vector<TranscriptMove> moves;
  std::optional<Color> winner;  // empty when the game did not finish
  int turns = 0;
  std::optional<std::vector<int>> witness;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

inline Transcript make_transcript(const GameState& s, std::string red_spec, std::string blue_spec,
                                  std::optional<std::uint64_t> seed = std::nullopt) {
  Transcript t;
  t.red_spec = std::move(red_spec);
  t.blue_spec = std::move(blue_spec);
  t.seed = seed;
  for (const ColoredEdge& e : s.edges()) t.moves.push_back({s.board().rank(e.u), s.board().rank(e.v), e.color});
  t.winner = winner_color(s.outcome());
  t.turns = s.turns();
  if (s.over()) t.witness = s.witness_ranks();
  return t;
}

struct MatchResult {
  GameState state;
  Transcript transcript;
  bool finished = false;
};

// Alternates builder proposals and painter colours until a win or until
// turn_cap edges have been coloured. Strategy errors propagate.
inline MatchResult run_match(const OrderedGraph& red_target, const OrderedGraph& blue_target,
                             BuilderStrategy& builder, PainterStrategy& painter, int turn_cap,
                             std::string red_spec = {}, std::string blue_spec = {}) {
  if (turn_cap < 1) throw GameError("turn cap must be at least 1");
  GameState s(red_target, blue_target);
  while (!s.over() && s.turns() < turn_cap) {
    const BoardEdge e = builder.next_move(s);
    if (s.over()) break;  // a new vertex completed a target with isolated vertices
    PendingMove token;
    try {
      token = s.propose_edge(e.u, e.v);
    } catch (const GameError& err) {
      throw StrategyError(builder.name() + " proposed an invalid move: " + err.what());
    }
    s.paint(token, painter.choose_color(s, token.u, token.v));
  }
  if (red_spec.empty()) red_spec = to_spec(red_target);
  if (blue_spec.empty()) blue_spec = to_spec(blue_target);
  Transcript t = make_transcript(s, std::move(red_spec), std::move(blue_spec), painter.seed());
  const bool finished = s.over();
  return {std::move(s), std::move(t), finished};
}

// ---------------------------------------------------------------------------
// JSON: {"red", "blue", "seed", "moves": [[u, v, "r"|"b"], ...], "winner",
// "turns", "witness"}.

inline nlohmann::json transcript_to_json(const Transcript& t) {
  nlohmann::json j;
  j["red"] = t.red_spec;
  j["blue"] = t.blue_spec;
  j["seed"] = t.seed ? nlohmann::json(*t.seed) : nlohmann::json(nullptr);
  nlohmann::json moves = nlohmann::json::array();
  for (const TranscriptMove& m : t.moves) moves.push_back({m.u_rank, m.v_rank, std::string(1, color_code(m.color))});
  j["moves"] = std::move(moves);
  j["winner"] = t.winner ? nlohmann::json(std::string(1, color_code(*t.winner))) : nlohmann::json(nullptr);
  j["turns"] = t.turns;
  j["witness"] = t.witness ? nlohmann::json(*t.witness) : nlohmann::json(nullptr);
  return j;
}

inline std::string export_transcript(const Transcript& t) { return transcript_to_json(t).dump(); }

namespace detail {

inline Color parse_color_code(const nlohmann::json& j, const char* what) {
  if (!j.is_string()) throw TranscriptError(std::string(what) + " must be \"r\" or \"b\"");
  const auto s = j.get<std::string>();
  if (s == "r") return Color::red;
  if (s == "b") return Color::blue;
  throw TranscriptError(std::string(what) + " must be \"r\" or \"b\"");
}

inline const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw TranscriptError(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace detail

// Replays the moves on a board holding every referenced rank and rejects the
// transcript unless the replay reproduces its turn count, winner and a valid
// witness.
inline Transcript transcript_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw TranscriptError("transcript must be a JSON object");
  Transcript t;
  const auto& red = detail::field(j, "red");
  const auto& blue = detail::field(j, "blue");
  if (!red.is_string() || !blue.is_string()) throw TranscriptError("red/blue must be graph spec strings");
  t.red_spec = red.get<std::string>();
  t.blue_spec = blue.get<std::string>();
  if (auto it = j.find("seed"); it != j.end() && !it->is_null()) {
    if (!it->is_number_unsigned() && !it->is_number_integer()) throw TranscriptError("seed must be an integer");
    t.seed = it->get<std::uint64_t>();
  }
  const auto& moves = detail::field(j, "moves");
  if (!moves.is_array()) throw TranscriptError("moves must be an array");
  int max_rank = 0;
  for (const auto& m : moves) {
    if (!m.is_array() || m.size() != 3 || !m[0].is_number_integer() || !m[1].is_number_integer()) {
      throw TranscriptError("each move must be [u_rank, v_rank, \"r\"|\"b\"]");
    }
    TranscriptMove mv{m[0].get<int>(), m[1].get<int>(), detail::parse_color_code(m[2], "move colour")};
    if (mv.u_rank < 1 || mv.v_rank < 1) throw TranscriptError("move references an unknown rank");
    if (mv.u_rank > mv.v_rank) std::swap(mv.u_rank, mv.v_rank);
    max_rank = std::max(max_rank, mv.v_rank);
    t.moves.push_back(mv);
  }
  const auto& winner = detail::field(j, "winner");
  if (!winner.is_null()) t.winner = detail::parse_color_code(winner, "winner");
  const auto& turns = detail::field(j, "turns");
  if (!turns.is_number_integer()) throw TranscriptError("turns must be an integer");
  t.turns = turns.get<int>();
  const auto& witness = detail::field(j, "witness");
  if (!witness.is_null()) {
    if (!witness.is_array()) throw TranscriptError("witness must be an array of ranks");
    std::vector<int> w;
    for (const auto& r : witness) {
      if (!r.is_number_integer() || r.get<int>() < 1) throw TranscriptError("witness must be an array of ranks");
      w.push_back(r.get<int>());
      max_rank = std::max(max_rank, w.back());
    }
    t.witness = std::move(w);
  }

  OrderedGraph red_target;
  OrderedGraph blue_target;
  try {
    red_target = parse_graph_spec(t.red_spec);
    blue_target = parse_graph_spec(t.blue_spec);
  } catch (const ParseError& e) {
    throw TranscriptError(std::string("bad target spec: ") + e.what());
  }
  if (t.turns != static_cast<int>(t.moves.size())) throw TranscriptError("turns does not match the move count");

  GameState s(red_target, blue_target);
  for (int r = 0; r < max_rank; ++r) s.new_vertex(Placement::rightmost());
  for (const TranscriptMove& m : t.moves) {
    if (s.over()) throw TranscriptError("replay mismatch: game was already won before the last move");
    if (m.u_rank == m.v_rank) throw TranscriptError("move joins a vertex to itself");
    const VertexHandle u = s.board().at_rank(m.u_rank);
    const VertexHandle v = s.board().at_rank(m.v_rank);
    if (s.edge_color(u, v)) throw TranscriptError("pair coloured twice");
    s.paint(s.propose_edge(u, v), m.color);
  }
  if (winner_color(s.outcome()) != t.winner) throw TranscriptError("replay mismatch: winner differs");
  if (t.winner.has_value() != t.witness.has_value()) throw TranscriptError("witness must be present exactly when there is a winner");
  if (t.witness) {
    const OrderedGraph& target = s.target(*t.winner);
    const std::vector<int>& w = *t.witness;
    if (static_cast<int>(w.size()) != target.vertex_count()) throw TranscriptError("witness has the wrong length");
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i - 1] >= w[i]) throw TranscriptError("witness is not increasing");
    }
    const auto host = s.board().view(*t.winner);
    for (const Edge& e : target.edges()) {
      if (!host.has_edge(w[e.u - 1], w[e.v - 1])) throw TranscriptError("witness is not a monochromatic copy");
    }
  }
  return t;
}

inline Transcript import_transcript(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw TranscriptError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return transcript_from_json(j);
  } catch (const GameError& e) {
    throw TranscriptError(std::string("replay failed: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw TranscriptError(std::string("schema violation: ") + e.what());
  }
}

}  // namespace oramsey
