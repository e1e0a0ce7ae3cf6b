#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oramsey/bounds.hpp"
#include "oramsey/cycle_biclique_builder.hpp"
#include "oramsey/leaf_recursion_builder.hpp"
#include "oramsey/minimax_players.hpp"
#include "oramsey/solver.hpp"
#include "oramsey/strategy.hpp"

namespace oramsey {

// Optional knobs; unset values are derived from the targets where possible.
struct StrategyParams {
  std::optional<int> k;             // cycle-biclique: cycle length
  std::optional<int> n;             // cycle-biclique: biclique side; leaf-recursion: clique size
  std::optional<int> block;         // cycle-biclique: bridging block size (default 2n-1)
  std::optional<int> board;         // minimax builder: N
  std::optional<int> room;          // minimax painter: untouched vertices per gap
  std::optional<int> max_vertices;  // clique builder: stop after K_m
  std::uint64_t seed = 0;
  std::uint64_t node_budget = SolverOptions{}.node_budget;
};

inline const std::vector<std::string>& builder_names() {
  static const std::vector<std::string> names{"builder:clique", "builder:cycle-biclique", "builder:leaf-recursion",
                                              "builder:minimax", "builder:random"};
  return names;
}

inline const std::vector<std::string>& painter_names() {
  static const std::vector<std::string> names{"painter:degree-threshold", "painter:random", "painter:all-red",
                                              "painter:all-blue", "painter:minimax"};
  return names;
}

// Accepts "clique" as well as "builder:clique".
inline std::string qualified_name(std::string_view role, std::string_view name) {
  const std::string prefix = std::string(role) + ":";
  if (name.substr(0, prefix.size()) == prefix) return std::string(name);
  return prefix + std::string(name);
}

inline std::unique_ptr<BuilderStrategy> make_builder(std::string_view name, const OrderedGraph& red,
                                                     const OrderedGraph& blue, const StrategyParams& p = {}) {
  const std::string full = qualified_name("builder", name);
  if (full == "builder:clique") return std::make_unique<CliqueBuilder>(p.max_vertices.value_or(0));
  if (full == "builder:random") return std::make_unique<RandomBuilder>(p.seed);
  if (full == "builder:cycle-biclique") {
    std::optional<int> k = p.k;
    if (!k) k = as_cycle_pattern(red);
    if (!k && red.vertex_count() >= 3 && red == cycle_graph(red.vertex_count())) k = red.vertex_count();
    std::optional<int> n = p.n ? p.n : as_balanced_biclique(blue);
    if (!k || !n) throw StrategyError("builder:cycle-biclique needs k and n (or cycle / K_{n,n} targets)");
    return std::make_unique<CycleBicliqueBuilder>(*k, *n, p.block.value_or(0));
  }
  if (full == "builder:leaf-recursion") {
    std::optional<int> n = p.n ? p.n : as_clique(blue);
    if (!n) throw StrategyError("builder:leaf-recursion needs a clique blue target or n");
    return std::make_unique<LeafRecursionBuilder>(red, *n);
  }
  if (full == "builder:minimax") {
    std::optional<int> board = p.board;
    if (!board) board = ordered_ramsey_number(red, blue, 8).value;
    if (!board) throw StrategyError("builder:minimax needs --board (r_< is beyond 8)");
    return std::make_unique<MinimaxBuilder>(red, blue, *board, SolverOptions{p.node_budget});
  }
  throw StrategyError("unknown builder '" + std::string(name) + "'");
}

inline std::unique_ptr<PainterStrategy> make_painter(std::string_view name, const StrategyParams& p = {}) {
  const std::string full = qualified_name("painter", name);
  if (full == "painter:degree-threshold") return std::make_unique<DegreeThresholdPainter>();
  if (full == "painter:random") return std::make_unique<RandomPainter>(p.seed);
  if (full == "painter:all-red") return std::make_unique<ConstantPainter>(Color::red);
  if (full == "painter:all-blue") return std::make_unique<ConstantPainter>(Color::blue);
  if (full == "painter:minimax") return std::make_unique<MinimaxPainter>(p.room.value_or(1), SolverOptions{p.node_budget});
  throw StrategyError("unknown painter '" + std::string(name) + "'");
}

}  // namespace oramsey
