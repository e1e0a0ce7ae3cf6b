#pragma once

#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "oramsey/strategy.hpp"

namespace oramsey {

// Builder forcing a red C*_k (v1v2, v1v3, v3v4, ..., v(k-1)vk, v2vk) or a
// blue K_{n,n}.
//
//   1. Build K_{n,2n^2} on fresh vertices, column by column. Unless a blue
//      K_{n,n} appeared, some left vertex v has >= 2n red right neighbours;
//      the smallest-ranked such v is used and its 2n smallest red neighbours
//      become y_1 < ... < y_n < x_1 < ... < x_n. X_1 = {x_i}.
//   2. k-3 times: add a block of `block_size` fresh vertices to the right and
//      join it completely to X_i. X_{i+1} is the n smallest block vertices
//      with a red edge back to X_i.
//   3. Join {y_j} completely to X_{k-2}. A red edge y_j x closes
//      v -> X_1 -> ... -> X_{k-2} -> y_j -> v in red; otherwise the edges
//      form a blue K_{n,n}.
//
// With block_size = 2n-1 this takes at most 2n^3 + (k-3)n(2n-1) + n^2 turns.
// n block vertices without a red back edge would span a blue K_{n,n} with
// X_i, so a block of 2n-1 always leaves n vertices for X_{i+1}.
class CycleBicliqueBuilder final : public BuilderStrategy {
 public:
  CycleBicliqueBuilder(int k, int n, int block_size = 0) : k_(k), n_(n), block_(block_size > 0 ? block_size : 2 * n - 1) {
    if (k < 3) throw StrategyError("cycle-biclique builder needs k >= 3");
    if (n < 1) throw StrategyError("cycle-biclique builder needs n >= 1");
    if (block_ < n) throw StrategyError("bridging block must hold at least n vertices");
  }

  BoardEdge next_move(GameState& s) override {
    while (queue_.empty()) advance(s);
    const BoardEdge e = queue_.front();
    queue_.pop_front();
    return e;
  }

  std::unique_ptr<BuilderStrategy> clone() const override { return std::make_unique<CycleBicliqueBuilder>(*this); }
  std::string name() const override { return "builder:cycle-biclique"; }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int block_size() const noexcept { return block_; }

 private:
  enum class Phase { start, bipartite, bridge, close, done };

  static bool is_red(const GameState& s, VertexHandle a, VertexHandle b) {
    auto c = s.edge_color(a, b);
    return c && *c == Color::red;
  }

  // Queues a complete bipartite graph, one right-hand vertex at a time.
  void queue_columns(const std::vector<VertexHandle>& left, const std::vector<VertexHandle>& right) {
    for (VertexHandle r : right) {
      for (VertexHandle l : left) queue_.push_back({l, r});
    }
  }

  void advance(GameState& s) {
    switch (phase_) {
      case Phase::start: {
        std::vector<VertexHandle> left, right;
        for (int i = 0; i < n_; ++i) left.push_back(s.new_vertex(Placement::rightmost()));
        for (int i = 0; i < 2 * n_ * n_; ++i) right.push_back(s.new_vertex(Placement::rightmost()));
        queue_columns(left, right);
        left_ = std::move(left);
        right_ = std::move(right);
        phase_ = Phase::bipartite;
        return;
      }
      case Phase::bipartite: {
        bool found = false;
        for (VertexHandle v : left_) {
          std::vector<VertexHandle> red;
          for (VertexHandle r : right_) {
            if (is_red(s, v, r)) red.push_back(r);
          }
          if (static_cast<int>(red.size()) >= 2 * n_) {
            hub_ = v;
            y_.assign(red.begin(), red.begin() + n_);
            current_.assign(red.begin() + n_, red.begin() + 2 * n_);
            found = true;
            break;
          }
        }
        if (!found) throw StrategyError("no left vertex has 2n red neighbours and no blue K_{n,n} was declared");
        bridges_done_ = 0;
        phase_ = Phase::bridge;
        return;
      }
      case Phase::bridge: {
        if (!block_vertices_.empty()) {
          std::vector<VertexHandle> next;
          for (VertexHandle b : block_vertices_) {
            bool back = false;
            for (VertexHandle x : current_) back = back || is_red(s, x, b);
            if (back && static_cast<int>(next.size()) < n_) next.push_back(b);
          }
          if (static_cast<int>(next.size()) < n_) {
            throw StrategyError("bridging block has fewer than n red back edges and no blue K_{n,n} was declared");
          }
          current_ = std::move(next);
          block_vertices_.clear();
          ++bridges_done_;
        }
        if (bridges_done_ == k_ - 3) {
          queue_columns(y_, current_);
          phase_ = Phase::close;
          return;
        }
        for (int i = 0; i < block_; ++i) block_vertices_.push_back(s.new_vertex(Placement::rightmost()));
        queue_columns(current_, block_vertices_);
        return;
      }
      case Phase::close:
      case Phase::done:
        phase_ = Phase::done;
        throw StrategyError("cycle-biclique plan finished without a win for the game's targets");
    }
  }

  int k_;
  int n_;
  int block_;
  Phase phase_ = Phase::start;
  std::deque<BoardEdge> queue_;
  std::vector<VertexHandle> left_;
  std::vector<VertexHandle> right_;
  VertexHandle hub_;
  std::vector<VertexHandle> y_;
  std::vector<VertexHandle> current_;
  std::vector<VertexHandle> block_vertices_;
  int bridges_done_ = 0;
};

}  // namespace oramsey
