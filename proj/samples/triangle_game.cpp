// Plays the clique builder against every painter in the registry on
// (P_2, K_3), then asks the exact solver for the optimal value.

#include <iostream>

#include "oramsey/match.hpp"
#include "oramsey/registry.hpp"
#include "oramsey/solver.hpp"

int main() {
  using namespace oramsey;
  const OrderedGraph red = parse_graph_spec("path:2");
  const OrderedGraph blue = parse_graph_spec("clique:3");

  StrategyParams params;
  params.seed = 7;
  for (const std::string& name : painter_names()) {
    auto builder = make_builder("clique", red, blue, params);
    auto painter = make_painter(name, params);
    const MatchResult r = run_match(red, blue, *builder, *painter, 100);
    std::cout << name << ": " << color_name(*r.transcript.winner) << " wins in " << r.transcript.turns << '\n';
  }

  const SolveResult best = solve_restricted(red, blue, 3);
  std::cout << "optimal play on 3 vertices: " << best.value << " turns\n";
}
