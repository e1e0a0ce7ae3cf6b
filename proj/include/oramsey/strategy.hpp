#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oramsey/game.hpp"

namespace oramsey {

struct BoardEdge {
  VertexHandle u;
  VertexHandle v;
};

// Builder: picks the next pair, creating vertices through state.new_vertex as
// needed. Implementations keep per-game phase memory and must be cloneable so
// a game tree can branch on every painter reply.
class BuilderStrategy {
 public:
  virtual ~BuilderStrategy() = default;
  virtual BoardEdge next_move(GameState& state) = 0;
  virtual std::unique_ptr<BuilderStrategy> clone() const = 0;
  virtual std::string name() const = 0;
};

class PainterStrategy {
 public:
  virtual ~PainterStrategy() = default;
  // (u, v) is the pending pair with u before v; the pending edge is not yet
  // part of state.edges().
  virtual Color choose_color(const GameState& state, VertexHandle u, VertexHandle v) = 0;
  virtual std::unique_ptr<PainterStrategy> clone() const = 0;
  virtual std::string name() const = 0;
  virtual std::optional<std::uint64_t> seed() const { return std::nullopt; }
};

// ---------------------------------------------------------------------------
// Painters.

// Blue iff d+(u) < d-(v), degrees over every previously coloured edge.
class DegreeThresholdPainter final : public PainterStrategy {
 public:
  Color choose_color(const GameState& s, VertexHandle u, VertexHandle v) override {
    return s.right_degree(u) < s.left_degree(v) ? Color::blue : Color::red;
  }
  std::unique_ptr<PainterStrategy> clone() const override { return std::make_unique<DegreeThresholdPainter>(*this); }
  std::string name() const override { return "painter:degree-threshold"; }
};

class ConstantPainter final : public PainterStrategy {
 public:
  explicit ConstantPainter(Color c) : color_(c) {}
  Color choose_color(const GameState&, VertexHandle, VertexHandle) override { return color_; }
  std::unique_ptr<PainterStrategy> clone() const override { return std::make_unique<ConstantPainter>(*this); }
  std::string name() const override { return color_ == Color::red ? "painter:all-red" : "painter:all-blue"; }

 private:
  Color color_;
};

// One bit per call from a seeded mt19937_64; ignores the board entirely.
class RandomPainter final : public PainterStrategy {
 public:
  explicit RandomPainter(std::uint64_t seed) : seed_(seed), engine_(seed) {}
  Color choose_color(const GameState&, VertexHandle, VertexHandle) override {
    return (engine_() >> 63) != 0 ? Color::blue : Color::red;
  }
  std::unique_ptr<PainterStrategy> clone() const override { return std::make_unique<RandomPainter>(*this); }
  std::string name() const override { return "painter:random"; }
  std::optional<std::uint64_t> seed() const override { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Replays a fixed colour sequence, then repeats `fallback`.
class ScriptedPainter final : public PainterStrategy {
 public:
  explicit ScriptedPainter(std::vector<Color> script, Color fallback = Color::red)
      : script_(std::move(script)), fallback_(fallback) {}
  Color choose_color(const GameState& s, VertexHandle, VertexHandle) override {
    const auto t = static_cast<std::size_t>(s.turns());
    return t < script_.size() ? script_[t] : fallback_;
  }
  std::unique_ptr<PainterStrategy> clone() const override { return std::make_unique<ScriptedPainter>(*this); }
  std::string name() const override { return "painter:scripted"; }

 private:
  std::vector<Color> script_;
  Color fallback_;
};

// ---------------------------------------------------------------------------
// Baseline builders.

// Grows a clique one rightmost vertex at a time; the new vertex j is joined
// to 1..j-1 in increasing order. After C(m,2) turns the board holds K_m, so
// the game ends once m reaches the ordered Ramsey number of the targets.
// max_vertices = 0 means unbounded.
class CliqueBuilder final : public BuilderStrategy {
 public:
  explicit CliqueBuilder(int max_vertices = 0) : max_vertices_(max_vertices) {}

  BoardEdge next_move(GameState& s) override {
    while (true) {
      if (vertices_.size() < 2 || next_left_ + 1 == static_cast<int>(vertices_.size())) {
        if (max_vertices_ > 0 && static_cast<int>(vertices_.size()) >= max_vertices_) {
          throw StrategyError("clique builder exhausted K_" + std::to_string(max_vertices_));
        }
        vertices_.push_back(s.new_vertex(Placement::rightmost()));
        next_left_ = 0;
        continue;
      }
      const VertexHandle u = vertices_[next_left_++];
      const VertexHandle v = vertices_.back();
      if (!s.edge_color(u, v)) return {u, v};
    }
  }

  std::unique_ptr<BuilderStrategy> clone() const override { return std::make_unique<CliqueBuilder>(*this); }
  std::string name() const override { return "builder:clique"; }

 private:
  int max_vertices_;
  std::vector<VertexHandle> vertices_;
  int next_left_ = 0;
};

// Uniform random uncoloured pair. With probability 1/(m+1) on an m-vertex
// board, or when every pair is already coloured, it first inserts a vertex
// into a uniformly random gap, so the board grows roughly as a random-order
// clique.
class RandomBuilder final : public BuilderStrategy {
 public:
  explicit RandomBuilder(std::uint64_t seed) : engine_(seed) {}

  BoardEdge next_move(GameState& s) override {
    const Board& b = s.board();
    const int m = b.size();
    const long long total = static_cast<long long>(m) * (m - 1) / 2;
    if (m < 2 || total == s.turns() || below(static_cast<std::uint64_t>(m) + 1) == 0) {
      insert_random(s);
    }
    std::vector<std::pair<int, int>> open;
    const int size = b.size();
    for (int i = 1; i <= size; ++i) {
      for (int j = i + 1; j <= size; ++j) {
        if (!b.color(b.at_rank(i), b.at_rank(j))) open.emplace_back(i, j);
      }
    }
    if (open.empty()) {
      insert_random(s);
      return next_move(s);
    }
    const auto [i, j] = open[below(open.size())];
    return {b.at_rank(i), b.at_rank(j)};
  }

  std::unique_ptr<BuilderStrategy> clone() const override { return std::make_unique<RandomBuilder>(*this); }
  std::string name() const override { return "builder:random"; }

 private:
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  void insert_random(GameState& s) {
    const Board& b = s.board();
    const int m = b.size();
    const auto slot = static_cast<int>(below(static_cast<std::uint64_t>(m) + 1));
    if (slot == 0) {
      s.new_vertex(Placement::leftmost());
    } else if (slot == m) {
      s.new_vertex(Placement::rightmost());
    } else {
      s.new_vertex(Placement::between(b.at_rank(slot), b.at_rank(slot + 1)));
    }
  }

  std::mt19937_64 engine_;
};

}  // namespace oramsey
