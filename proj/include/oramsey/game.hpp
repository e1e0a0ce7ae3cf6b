#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oramsey/board.hpp"
#include "oramsey/containment.hpp"
#include "oramsey/ordered_graph.hpp"

namespace oramsey {

struct ColoredEdge {
  VertexHandle u;  // u precedes v
  VertexHandle v;
  Color color = Color::red;
  int turn = 0;  // 1-based
};

struct VertexCreation {
  VertexHandle vertex;
  Placement placement;
  int turn = 0;  // number of coloured edges when the vertex was created
};

enum class Outcome : std::uint8_t { ongoing, red_win, blue_win };

inline std::optional<Color> winner_color(Outcome o) {
  if (o == Outcome::red_win) return Color::red;
  if (o == Outcome::blue_win) return Color::blue;
  return std::nullopt;
}

// Builder's proposal awaiting a colour.
struct PendingMove {
  VertexHandle u;
  VertexHandle v;
  int serial = 0;
};

// One game: two targets, a board, and the coloured edges in play order.
//
// Wins are detected after every change. A paint only searches embeddings
// through the new edge, which is enough because the position before it was
// not won. New vertices matter only for targets with isolated vertices.
class GameState {
 public:
  GameState(OrderedGraph red_target, OrderedGraph blue_target)
      : red_target_(std::move(red_target)), blue_target_(std::move(blue_target)) {
    check_full(Color::red);
    check_full(Color::blue);
  }

  const OrderedGraph& target(Color c) const { return c == Color::red ? red_target_ : blue_target_; }
  const OrderedGraph& red_target() const { return red_target_; }
  const OrderedGraph& blue_target() const { return blue_target_; }

  const Board& board() const noexcept { return board_; }
  const std::vector<ColoredEdge>& edges() const noexcept { return edges_; }
  const std::vector<VertexCreation>& creations() const noexcept { return creations_; }
  int turns() const noexcept { return static_cast<int>(edges_.size()); }

  Outcome outcome() const noexcept { return outcome_; }
  bool over() const noexcept { return outcome_ != Outcome::ongoing; }
  // Handles of the winning copy, in target vertex order.
  const std::vector<VertexHandle>& witness() const noexcept { return witness_; }
  std::vector<int> witness_ranks() const {
    std::vector<int> out;
    for (VertexHandle h : witness_) out.push_back(board_.rank(h));
    return out;
  }

  const std::optional<PendingMove>& pending() const noexcept { return pending_; }

  // d+ / d- over all coloured edges.
  int right_degree(VertexHandle h) const { return right_degree_.at(h.id); }
  int left_degree(VertexHandle h) const { return left_degree_.at(h.id); }

  std::optional<Color> edge_color(VertexHandle a, VertexHandle b) const { return board_.color(a, b); }

  VertexHandle new_vertex(const Placement& where) {
    const VertexHandle h = board_.insert(where);
    creations_.push_back({h, where, turns()});
    right_degree_.push_back(0);
    left_degree_.push_back(0);
    if (!over()) {
      if (red_target_.has_isolated_vertex()) check_full(Color::red);
      if (!over() && blue_target_.has_isolated_vertex()) check_full(Color::blue);
    }
    return h;
  }

  PendingMove propose_edge(VertexHandle a, VertexHandle b) {
    if (over()) throw GameError("game already won");
    if (pending_) throw GameError("a proposed edge is still waiting for a colour");
    if (!board_.valid(a) || !board_.valid(b)) throw GameError("edge endpoint is not on the board");
    if (a == b) throw GameError("an edge needs two distinct vertices");
    if (board_.color(a, b)) throw GameError("pair already coloured");
    if (board_.precedes(b, a)) std::swap(a, b);
    pending_ = PendingMove{a, b, ++serial_};
    return *pending_;
  }

  void paint(const PendingMove& token, Color c) {
    if (!pending_ || pending_->serial != token.serial || !(pending_->u == token.u) || !(pending_->v == token.v)) {
      throw GameError("no such pending move");
    }
    const PendingMove m = *pending_;
    pending_.reset();
    board_.set_color(m.u, m.v, c);
    edges_.push_back({m.u, m.v, c, turns() + 1});
    ++right_degree_[m.u.id];
    ++left_degree_[m.v.id];
    const auto host = board_.view(c);
    EmbeddingSearch search(target(c), host);
    if (auto found = search.find_through(board_.rank(m.u), board_.rank(m.v))) declare(c, *found);
  }

 private:
  void check_full(Color c) {
    if (over()) return;
    const auto host = board_.view(c);
    if (auto found = contains(target(c), host)) declare(c, *found);
  }

  void declare(Color c, const Embedding& ranks) {
    outcome_ = c == Color::red ? Outcome::red_win : Outcome::blue_win;
    witness_.clear();
    for (int r : ranks) witness_.push_back(board_.at_rank(r));
  }

  OrderedGraph red_target_;
  OrderedGraph blue_target_;
  Board board_;
  std::vector<ColoredEdge> edges_;
  std::vector<VertexCreation> creations_;
  std::vector<int> right_degree_;
  std::vector<int> left_degree_;
  std::optional<PendingMove> pending_;
  int serial_ = 0;
  Outcome outcome_ = Outcome::ongoing;
  std::vector<VertexHandle> witness_;
};

// Colour-restricted subgraph of the board, relabelled by rank.
inline OrderedGraph color_subgraph(const GameState& s, Color c) {
  std::vector<Edge> edges;
  for (const ColoredEdge& e : s.edges()) {
    if (e.color == c) edges.push_back({s.board().rank(e.u), s.board().rank(e.v)});
  }
  return OrderedGraph(s.board().size(), std::move(edges));
}

}  // namespace oramsey
