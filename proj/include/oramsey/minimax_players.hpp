#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "oramsey/solver.hpp"
#include "oramsey/strategy.hpp"

namespace oramsey {

// Optimal Builder on a fixed board [N]: creates the N vertices on its first
// move and then plays the solver's lexicographically first optimal pair.
class MinimaxBuilder final : public BuilderStrategy {
 public:
  MinimaxBuilder(const OrderedGraph& red, const OrderedGraph& blue, int board_size, SolverOptions options = {})
      : solver_(std::make_shared<RestrictedSolver>(red, blue, board_size, options)) {}

  BoardEdge next_move(GameState& s) override {
    const int n = solver_->board_size();
    if (s.board().size() == 0) {
      for (int i = 0; i < n; ++i) s.new_vertex(Placement::rightmost());
    }
    if (s.board().size() != n) throw StrategyError("minimax builder expects a board of exactly N vertices");
    const Position p = position_of(s);
    Edge e;
    try {
      e = solver_->best_builder_move(p);
    } catch (const BudgetExceeded& b) {
      throw StrategyError(std::string("minimax builder: ") + b.what());
    }
    return {s.board().at_rank(e.u), s.board().at_rank(e.v)};
  }

  std::unique_ptr<BuilderStrategy> clone() const override { return std::make_unique<MinimaxBuilder>(*this); }
  std::string name() const override { return "builder:minimax"; }

  Position position_of(const GameState& s) const {
    Position p;
    const PairIndex& idx = solver_->pairs();
    for (const ColoredEdge& e : s.edges()) p.mask(e.color) |= std::uint64_t{1} << idx.index(s.board().rank(e.u), s.board().rank(e.v));
    return p;
  }

 private:
  std::shared_ptr<RestrictedSolver> solver_;  // shared by clones; the memo only ever grows
};

// Optimal Painter for the game on the current board with `room` untouched
// vertices added before, between and after the existing ones. A bigger room
// gives Builder more freedom; room = 0 restricts play to existing vertices.
class MinimaxPainter final : public PainterStrategy {
 public:
  explicit MinimaxPainter(int room = 1, SolverOptions options = {}) : room_(room), options_(options) {}

  Color choose_color(const GameState& s, VertexHandle u, VertexHandle v) override {
    const int m = s.board().size();
    const int padded = m + room_ * (m + 1);
    if (padded > kMaxSolverBoard) {
      throw StrategyError("minimax painter: padded board of " + std::to_string(padded) + " vertices exceeds " +
                          std::to_string(kMaxSolverBoard));
    }
    RestrictedSolver& solver = solver_for(s, padded);
    auto slot = [&](VertexHandle h) { return room_ + (s.board().rank(h) - 1) * (room_ + 1) + 1; };
    Position p;
    for (const ColoredEdge& e : s.edges()) p.mask(e.color) |= std::uint64_t{1} << solver.pairs().index(slot(e.u), slot(e.v));
    try {
      return solver.best_color(p, slot(u), slot(v));
    } catch (const BudgetExceeded& b) {
      throw StrategyError(std::string("minimax painter: ") + b.what());
    }
  }

  std::unique_ptr<PainterStrategy> clone() const override { return std::make_unique<MinimaxPainter>(*this); }
  std::string name() const override { return "painter:minimax"; }

 private:
  RestrictedSolver& solver_for(const GameState& s, int padded) {
    auto it = solvers_.find(padded);
    if (it == solvers_.end()) {
      it = solvers_.emplace(padded, std::make_shared<RestrictedSolver>(s.red_target(), s.blue_target(), padded, options_)).first;
    }
    return *it->second;
  }

  int room_;
  SolverOptions options_;
  std::map<int, std::shared_ptr<RestrictedSolver>> solvers_;
};

}  // namespace oramsey
