#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oramsey/bounds.hpp"
#include "oramsey/cycle_biclique_builder.hpp"
#include "oramsey/leaf_recursion_builder.hpp"
#include "oramsey/solver.hpp"
#include "oramsey/strategy_compiler.hpp"

namespace oramsey {

struct BoundComparison {
  std::string name;
  BoundKind kind = BoundKind::upper;
  long long bound = 0;
  bool applicable = true;
  bool holds = true;
  std::string note;
};

struct BoundsVerification {
  SolveResult solve;
  std::optional<int> ordered_ramsey;  // r_<, when within the board
  std::vector<BoundComparison> comparisons;
  bool all_hold = true;
};

namespace detail {

// Board size a constructive builder needs on [N], via its compiled tree.
inline std::optional<int> strategy_board(const BuilderStrategy& b, const OrderedGraph& g1, const OrderedGraph& g2,
                                         int depth_cap, std::size_t node_cap) {
  try {
    const DecisionTree tree = enumerate_game_tree(b, g1, g2, depth_cap, node_cap);
    return compute_restriction_bound(tree).board_size;
  } catch (const StrategyError&) {
    return std::nullopt;
  }
}

}  // namespace detail

// Checks ceil(degree lower bound) <= r_o(G1, G2; N) <= every closed-form
// upper bound that is valid on [N]. A constructive upper bound is valid on
// [N] once N reaches the board its compiled strategy uses; C(r_<, 2) once
// N >= r_<. Also checks that the value is finite exactly when N >= r_<.
inline BoundsVerification verify_bounds(const OrderedGraph& g1, const OrderedGraph& g2, int board_size,
                                        SolverOptions options = {}, std::size_t tree_node_cap = 1U << 16) {
  BoundsVerification out;
  out.solve = solve_restricted(g1, g2, board_size, options);
  if (!out.solve.complete) throw BudgetExceeded("solver budget exhausted", out.solve.lower, out.solve.upper);
  const int value = out.solve.value;
  const bool finite = value != kNoForcedWin;

  auto add = [&](BoundComparison c) {
    if (c.applicable && !c.holds) out.all_hold = false;
    out.comparisons.push_back(std::move(c));
  };

  const BoundReport lower = thm_degree_lower(g1, g2);
  add({lower.name, BoundKind::lower, lower.integer_view, true, !finite || lower.integer_view <= value, ""});

  const RamseyResult ramsey = ordered_ramsey_number(g1, g2, board_size);
  out.ordered_ramsey = ramsey.value;
  add({"finite_iff_ordered_ramsey", BoundKind::exact, ramsey.value.value_or(0), true, finite == ramsey.value.has_value(),
       ramsey.value ? "r_< = " + std::to_string(*ramsey.value) : "r_< exceeds the board"});
  if (ramsey.value) {
    const BoundReport clique = clique_upper(*ramsey.value);
    add({clique.name, BoundKind::upper, clique.integer_view, true, finite && value <= clique.integer_view, ""});
  }
  if (finite) {
    add({"all_pairs", BoundKind::upper, choose2(board_size), true, value <= choose2(board_size), ""});
  }

  if (auto n = as_clique(g2); n && *n >= 2 && g1.vertex_count() >= 2 && is_tree(g1)) {
    const BoundReport leaf = leaf_recurrence_upper(g1, *n);
    const auto need = detail::strategy_board(LeafRecursionBuilder(g1, *n), g1, g2, static_cast<int>(leaf.integer_view),
                                             tree_node_cap);
    BoundComparison c{leaf.name, BoundKind::upper, leaf.integer_view, need && board_size >= *need, true, ""};
    c.note = need ? "strategy board " + std::to_string(*need) : "strategy tree too large to compile";
    if (c.applicable) c.holds = finite && value <= leaf.integer_view;
    add(std::move(c));
  }
  if (auto k = as_cycle_pattern(g1)) {
    if (auto n = as_balanced_biclique(g2)) {
      const BoundReport cyc = thm_cycle_biclique_upper(*k, *n);
      const auto need = detail::strategy_board(CycleBicliqueBuilder(*k, *n), g1, g2, static_cast<int>(cyc.integer_view),
                                               tree_node_cap);
      BoundComparison c{cyc.name, BoundKind::upper, cyc.integer_view, need && board_size >= *need, true, ""};
      c.note = need ? "strategy board " + std::to_string(*need) : "strategy tree too large to compile";
      if (c.applicable) c.holds = finite && value <= cyc.integer_view;
      add(std::move(c));
    }
  }
  return out;
}

}  // namespace oramsey
