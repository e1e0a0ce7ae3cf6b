#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oramsey/strategy.hpp"

namespace oramsey {

namespace detail {

// Half-open region of the board between two handles; an absent bound means
// the board end. Fresh vertices are appended at the region's right end.
struct Region {
  std::optional<VertexHandle> lo;
  std::optional<VertexHandle> hi;

  VertexHandle fresh(GameState& s) const {
    if (hi) {
      const Board& b = s.board();
      const int r = b.rank(*hi);
      if (r == 1) return s.new_vertex(Placement::leftmost());
      return s.new_vertex(Placement::between(b.at_rank(r - 1), *hi));
    }
    return s.new_vertex(Placement::rightmost());
  }
};

// Strategy for (tree, K_n) confined to a region. step() returns the next
// pair to propose, or nothing once it holds a red copy of its tree made of
// its own vertices (available through copy()). A blue K_n ends the whole
// game, so that case never reaches step().
class LeafNode {
 public:
  LeafNode(OrderedGraph tree, int n, Region region) : tree_(std::move(tree)), n_(n), region_(region) {
    if (tree_.vertex_count() > 2) {
      const std::vector<int> ls = leaves(tree_);
      leaf_ = ls.front();
      anchor_ = tree_.neighbors(leaf_).front();
      reduced_ = remove_vertex(tree_, leaf_);
    }
  }

  std::optional<BoardEdge> step(GameState& s) {
    if (tree_.vertex_count() == 2) return step_base(s);
    return step_recursive(s);
  }

  const std::vector<VertexHandle>& copy() const noexcept { return copy_; }

 private:
  // A single edge: K_n on fresh vertices; the first red edge is the copy.
  std::optional<BoardEdge> step_base(GameState& s) {
    if (hubs_.empty()) {
      for (int i = 0; i < n_; ++i) hubs_.push_back(region_.fresh(s));
      for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) pairs_.push_back({i, j});
      }
    }
    if (auto red = last_red(s)) {
      copy_ = {hubs_[red->first], hubs_[red->second]};
      if (s.board().precedes(copy_[1], copy_[0])) std::swap(copy_[0], copy_[1]);
      return std::nullopt;
    }
    return next_pair(s);
  }

  // n nested copies of T - leaf, then K_n on the copies' anchor vertices.
  std::optional<BoardEdge> step_recursive(GameState& s) {
    while (static_cast<int>(copies_.size()) < n_) {
      if (child_.empty()) child_.emplace_back(reduced_, n_, next_region());
      if (auto e = child_.front().step(s)) return e;
      copies_.push_back(child_.front().copy());
      child_.clear();
    }
    if (hubs_.empty()) {
      const int anchor_index = anchor_ < leaf_ ? anchor_ - 1 : anchor_ - 2;  // in T - leaf, 0-based
      for (const auto& c : copies_) hubs_.push_back(c[anchor_index]);
      for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) pairs_.push_back({i, j});
      }
    }
    if (auto red = last_red(s)) {
      // The later copy's anchor sits in the earlier copy's leaf gap.
      const int earlier = std::min(red->first, red->second);
      const int later = std::max(red->first, red->second);
      copy_ = copies_[earlier];
      copy_.insert(copy_.begin() + (leaf_ - 1), hubs_[later]);
      return std::nullopt;
    }
    return next_pair(s);
  }

  // Region for the next copy of T - leaf: the gap of the previous copy where
  // the leaf belongs.
  Region next_region() const {
    if (copies_.empty()) return region_;
    const std::vector<VertexHandle>& prev = copies_.back();
    const int k = tree_.vertex_count();
    if (leaf_ == 1) return {region_.lo, prev.front()};
    if (leaf_ == k) return {prev.back(), region_.hi};
    return {prev[leaf_ - 2], prev[leaf_ - 1]};
  }

  // Index pair of the last proposed hub edge if it came back red.
  std::optional<std::pair<int, int>> last_red(const GameState& s) const {
    if (cursor_ == 0) return std::nullopt;
    const auto [i, j] = pairs_[cursor_ - 1];
    const auto c = s.edge_color(hubs_[i], hubs_[j]);
    if (c && *c == Color::red) return std::make_pair(i, j);
    return std::nullopt;
  }

  std::optional<BoardEdge> next_pair(const GameState& s) {
    if (cursor_ >= pairs_.size()) {
      (void)s;
      throw StrategyError("leaf recursion: hub clique completed blue but the game did not end");
    }
    const auto [i, j] = pairs_[cursor_++];
    return BoardEdge{hubs_[i], hubs_[j]};
  }

  OrderedGraph tree_;
  int n_;
  Region region_;
  int leaf_ = 0;    // removed leaf, 1-based in tree_
  int anchor_ = 0;  // its neighbour
  OrderedGraph reduced_;
  std::vector<std::vector<VertexHandle>> copies_;
  std::vector<LeafNode> child_;  // at most one active sub-strategy
  std::vector<VertexHandle> hubs_;
  std::vector<std::pair<int, int>> pairs_;
  std::size_t cursor_ = 0;
  std::vector<VertexHandle> copy_;
};

}  // namespace detail

// Builder for (T, K_n), T an ordered tree: removes the smallest-index leaf v
// (neighbour v_s), builds n red copies of T - v nested so that each copy lies
// in the previous copy's gap at v's position, then builds K_n on the copies
// of v_s. A red edge between copies j1 < j2 lets copy j2's v_s play v for
// copy j1; an all-blue K_n is the blue target. The copies of T - v are built
// the same way, down to single edges built as K_n on fresh vertices. At most
// B(2) = C(n,2), B(l) = C(n,2) + n B(l-1) turns.
//
// Nesting uses dense-order insertion: every copy inserts its vertices inside
// its region, so no gaps have to be reserved in advance.
class LeafRecursionBuilder final : public BuilderStrategy {
 public:
  LeafRecursionBuilder(OrderedGraph tree, int n) : root_(validated(tree, n), n, {}) {}

  BoardEdge next_move(GameState& s) override {
    if (auto e = root_.step(s)) return *e;
    throw StrategyError("leaf recursion finished its red copy but the game did not end");
  }

  std::unique_ptr<BuilderStrategy> clone() const override { return std::make_unique<LeafRecursionBuilder>(*this); }
  std::string name() const override { return "builder:leaf-recursion"; }

 private:
  static OrderedGraph validated(const OrderedGraph& tree, int n) {
    if (tree.edge_count() == 0) throw StrategyError("leaf recursion needs a tree with at least one edge");
    if (!is_tree(tree)) throw StrategyError("leaf recursion needs a tree (connected, acyclic)");
    if (n < 2) throw StrategyError("leaf recursion needs clique size n >= 2");
    return tree;
  }

  detail::LeafNode root_;
};

}  // namespace oramsey
