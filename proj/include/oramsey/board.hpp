#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oramsey/error.hpp"

namespace oramsey {

enum class Color : std::uint8_t { red = 1, blue = 2 };

inline Color other(Color c) { return c == Color::red ? Color::blue : Color::red; }
inline char color_code(Color c) { return c == Color::red ? 'r' : 'b'; }
inline const char* color_name(Color c) { return c == Color::red ? "red" : "blue"; }

// A board vertex. The id is its creation index on the board that made it.
struct VertexHandle {
  int id = -1;

  friend bool operator==(VertexHandle, VertexHandle) = default;
};

struct Placement {
  enum class Kind : std::uint8_t { leftmost, rightmost, between };

  Kind kind = Kind::rightmost;
  VertexHandle a;  // between only
  VertexHandle b;

  static Placement leftmost() { return {Kind::leftmost, {}, {}}; }
  static Placement rightmost() { return {Kind::rightmost, {}, {}}; }
  static Placement between(VertexHandle a, VertexHandle b) { return {Kind::between, a, b}; }
};

inline const char* placement_name(Placement::Kind k) {
  switch (k) {
    case Placement::Kind::leftmost:
      return "leftmost";
    case Placement::Kind::rightmost:
      return "rightmost";
    case Placement::Kind::between:
      return "between";
  }
  return "?";
}

// Dense linear order of vertices with a colour per pair.
//
// New vertices can be inserted anywhere; the relative order of existing
// vertices never changes. Ranks (1-based positions) are relabelled on every
// insertion, which keeps comparisons O(1) at the board sizes games reach.
class Board {
 public:
  int size() const noexcept { return static_cast<int>(order_.size()); }

  bool valid(VertexHandle h) const noexcept { return h.id >= 0 && h.id < size(); }

  // between(a, b) puts the new vertex immediately before b, so repeated
  // insertions into the same gap append at its right end.
  VertexHandle insert(const Placement& where) {
    const VertexHandle h{size()};
    std::size_t at = order_.size();
    switch (where.kind) {
      case Placement::Kind::leftmost:
        at = 0;
        break;
      case Placement::Kind::rightmost:
        break;
      case Placement::Kind::between:
        require(where.a);
        require(where.b);
        if (!precedes(where.a, where.b)) throw GameError("between(a, b) needs a strictly before b");
        at = static_cast<std::size_t>(rank(where.b) - 1);
        break;
    }
    order_.insert(order_.begin() + static_cast<std::ptrdiff_t>(at), h.id);
    rank_.push_back(0);
    for (std::size_t r = at; r < order_.size(); ++r) rank_[order_[r]] = static_cast<int>(r) + 1;
    for (auto& row : colors_) row.push_back(0);
    colors_.emplace_back(order_.size(), 0);
    return h;
  }

  int rank(VertexHandle h) const {
    require(h);
    return rank_[h.id];
  }

  bool precedes(VertexHandle a, VertexHandle b) const { return rank(a) < rank(b); }

  VertexHandle at_rank(int r) const {
    if (r < 1 || r > size()) throw GameError("rank " + std::to_string(r) + " is not on the board");
    return {order_[r - 1]};
  }

  std::optional<Color> color(VertexHandle a, VertexHandle b) const {
    require(a);
    require(b);
    const std::uint8_t c = colors_[a.id][b.id];
    if (c == 0) return std::nullopt;
    return static_cast<Color>(c);
  }

  void set_color(VertexHandle a, VertexHandle b, Color c) {
    require(a);
    require(b);
    colors_[a.id][b.id] = static_cast<std::uint8_t>(c);
    colors_[b.id][a.id] = static_cast<std::uint8_t>(c);
  }

  // Colour-c subgraph indexed by rank; satisfies HostGraph.
  class ColorView {
   public:
    ColorView(const Board& board, Color c) : board_(&board), c_(static_cast<std::uint8_t>(c)) {}
    int vertex_count() const noexcept { return board_->size(); }
    bool has_edge(int i, int j) const noexcept {
      return board_->colors_[board_->order_[i - 1]][board_->order_[j - 1]] == c_;
    }

   private:
    const Board* board_;
    std::uint8_t c_;
  };

  ColorView view(Color c) const { return ColorView(*this, c); }

 private:
  void require(VertexHandle h) const {
    if (!valid(h)) throw GameError("unknown vertex handle " + std::to_string(h.id));
  }

  std::vector<int> order_;  // ids by rank
  std::vector<int> rank_;   // rank by id
  std::vector<std::vector<std::uint8_t>> colors_;
};

}  // namespace oramsey
