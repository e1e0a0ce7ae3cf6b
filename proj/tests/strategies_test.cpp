#include "oramsey/bounds.hpp"
#include "oramsey/cycle_biclique_builder.hpp"
#include "oramsey/leaf_recursion_builder.hpp"
#include "oramsey/match.hpp"
#include "oramsey/minimax_players.hpp"
#include "oramsey/registry.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace oramsey {
namespace {

std::vector<std::unique_ptr<PainterStrategy>> battery(int randoms) {
  std::vector<std::unique_ptr<PainterStrategy>> out;
  out.push_back(std::make_unique<ConstantPainter>(Color::red));
  out.push_back(std::make_unique<ConstantPainter>(Color::blue));
  out.push_back(std::make_unique<DegreeThresholdPainter>());
  for (int i = 0; i < randoms; ++i) out.push_back(std::make_unique<RandomPainter>(1000 + i));
  return out;
}

// Pattern formed by the witness in the final red graph.
OrderedGraph realized(const GameState& s) {
  std::vector<int> w = s.witness_ranks();
  return induced_subgraph(color_subgraph(s, *winner_color(s.outcome())), w);
}

TEST(DegreeThresholdPainter, UsesDegreesBeforeThePendingEdge) {
  GameState s(clique_graph(4), clique_graph(4));
  std::vector<VertexHandle> v;
  for (int i = 0; i < 4; ++i) v.push_back(s.new_vertex(Placement::rightmost()));
  DegreeThresholdPainter p;
  // d+(1) = 0, d-(2) = 0: not less, so red.
  auto t = s.propose_edge(v[0], v[1]);
  EXPECT_EQ(p.choose_color(s, t.u, t.v), Color::red);
  s.paint(t, Color::red);
  // d+(3) = 0 < d-(2) = 1: blue.
  t = s.propose_edge(v[1], v[2]);
  s.paint(t, Color::blue);
  t = s.propose_edge(v[2], v[3]);
  EXPECT_EQ(s.left_degree(v[2]), 1);
  EXPECT_EQ(s.right_degree(v[2]), 0);
  EXPECT_EQ(p.choose_color(s, t.u, t.v), Color::red);  // d+(3)=0, d-(4)=0
  s.paint(t, Color::red);
  t = s.propose_edge(v[0], v[3]);
  EXPECT_EQ(p.choose_color(s, t.u, t.v), Color::red);  // d+(1)=1, d-(4)=1
  s.paint(t, Color::red);
  t = s.propose_edge(v[1], v[3]);
  EXPECT_EQ(p.choose_color(s, t.u, t.v), Color::blue);  // d+(2)=1 < d-(4)=2
}

TEST(CliqueBuilder, ProposesInColexOrder) {
  GameState s(clique_graph(5), clique_graph(5));
  CliqueBuilder b;
  std::vector<std::pair<int, int>> seen;
  for (int i = 0; i < 6; ++i) {
    const BoardEdge e = b.next_move(s);
    seen.emplace_back(s.board().rank(e.u), s.board().rank(e.v));
    s.paint(s.propose_edge(e.u, e.v), Color::red);
  }
  EXPECT_EQ(seen, (std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

TEST(CliqueBuilder, MaxVerticesIsEnforced) {
  CliqueBuilder b(3);
  ConstantPainter red(Color::red);
  EXPECT_THROW(run_match(clique_graph(4), clique_graph(4), b, red, 100), StrategyError);
}

TEST(CliqueBuilder, FinishesWithinTheCliqueBound) {
  // r_<(P_3, P_3) = 5, so the clique builder wins within C(5,2) turns.
  for (auto& painter : battery(30)) {
    CliqueBuilder b;
    const auto r = run_match(path_graph(3), path_graph(3), b, *painter, 100);
    ASSERT_TRUE(r.finished);
    EXPECT_LE(r.transcript.turns, choose2(5));
  }
}

TEST(RandomBuilder, AlwaysProposesPlayablePairs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomBuilder b(seed);
    RandomPainter p(seed);
    EXPECT_NO_THROW(run_match(cycle_graph(5), biclique_graph(2, 2), b, p, 200));
  }
}

TEST(CycleBicliqueBuilder, RejectsBadParameters) {
  EXPECT_THROW(CycleBicliqueBuilder(2, 2), StrategyError);
  EXPECT_THROW(CycleBicliqueBuilder(3, 0), StrategyError);
  EXPECT_THROW(CycleBicliqueBuilder(3, 3, 2), StrategyError);
  EXPECT_EQ(CycleBicliqueBuilder(4, 3).block_size(), 5);
}

TEST(CycleBicliqueBuilder, SmallCase) {
  // k = 3, n = 1: one edge of each side; all-blue loses to K_{1,1} at once.
  CycleBicliqueBuilder b(3, 1);
  ConstantPainter blue(Color::blue);
  auto r = run_match(cycle_graph(3), biclique_graph(1, 1), b, blue, 100);
  EXPECT_EQ(r.transcript.winner, Color::blue);
  EXPECT_EQ(r.transcript.turns, 1);
  CycleBicliqueBuilder b2(3, 1);
  ConstantPainter red(Color::red);
  r = run_match(cycle_graph(3), biclique_graph(1, 1), b2, red, 100);
  EXPECT_EQ(r.transcript.winner, Color::red);
  EXPECT_EQ(r.transcript.turns, 3);
  EXPECT_LE(r.transcript.turns, thm_cycle_biclique_upper(3, 1).integer_view);
}

TEST(CycleBicliqueBuilder, WinsWithinTheBoundAgainstTheBattery) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 2}, {4, 1}, {6, 1}}) {
    const OrderedGraph red = cycle_star_pattern(k);
    const OrderedGraph blue = biclique_graph(n, n);
    const long long bound = thm_cycle_biclique_upper(k, n).integer_view;
    for (auto& painter : battery(20)) {
      CycleBicliqueBuilder b(k, n);
      const auto r = run_match(red, blue, b, *painter, static_cast<int>(bound) + 1);
      ASSERT_TRUE(r.finished) << k << "," << n << " " << painter->name();
      EXPECT_LE(r.transcript.turns, bound);
      if (r.transcript.winner == Color::red) { EXPECT_EQ(realized(r.state), red); }
    }
  }
}

TEST(CycleBicliqueBuilder, AllRedRealizesTheForcedPattern) {
  CycleBicliqueBuilder b(5, 2);
  ConstantPainter red(Color::red);
  const auto r = run_match(cycle_star_pattern(5), biclique_graph(2, 2), b, red, 1000);
  ASSERT_EQ(r.transcript.winner, Color::red);
  EXPECT_EQ(realized(r.state), cycle_star_pattern(5));
}

TEST(CycleBicliqueBuilder, NaturalCycleTargetCanExhaustThePlan) {
  // Against the natural C_4 the construction's red cycles have the wrong
  // order type, so an all-red painter runs the plan out.
  CycleBicliqueBuilder b(4, 1);
  ConstantPainter red(Color::red);
  EXPECT_THROW(run_match(cycle_graph(4), biclique_graph(1, 1), b, red, 1000), StrategyError);
}

TEST(LeafRecursionBuilder, RejectsNonTrees) {
  EXPECT_THROW(LeafRecursionBuilder(cycle_graph(3), 3), StrategyError);
  EXPECT_THROW(LeafRecursionBuilder(OrderedGraph::edgeless(2), 3), StrategyError);
  EXPECT_THROW(LeafRecursionBuilder(path_graph(3), 1), StrategyError);
}

TEST(LeafRecursionBuilder, ExtremePaintersOnPathVersusTriangle) {
  LeafRecursionBuilder b(path_graph(3), 3);
  ConstantPainter blue(Color::blue);
  auto r = run_match(path_graph(3), clique_graph(3), b, blue, 100);
  EXPECT_EQ(r.transcript.winner, Color::blue);
  EXPECT_EQ(r.transcript.turns, 3);
  LeafRecursionBuilder b2(path_graph(3), 3);
  ConstantPainter red(Color::red);
  r = run_match(path_graph(3), clique_graph(3), b2, red, 100);
  // Three red single-edge copies (each new one left of the last, so no red
  // P_3 yet), then one red hub edge joins two of them.
  EXPECT_EQ(r.transcript.winner, Color::red);
  EXPECT_EQ(r.transcript.turns, 4);
}

TEST(LeafRecursionBuilder, WinsWithinTheRecurrence) {
  const std::vector<std::pair<OrderedGraph, int>> cases = {
      {path_graph(2), 3},         {path_graph(3), 2},         {path_graph(3), 3},  {star_graph(0, 2), 2},
      {star_graph(2, 0), 2},      {path_graph(4), 3},         {star_graph(1, 2), 3},
      {OrderedGraph(4, {{1, 3}, {2, 3}, {3, 4}}), 2}, {OrderedGraph(4, {{1, 4}, {2, 4}, {2, 3}}), 3}};
  for (const auto& [tree, n] : cases) {
    const long long bound = leaf_recurrence_upper(tree, n).integer_view;
    for (auto& painter : battery(30)) {
      LeafRecursionBuilder b(tree, n);
      const auto r = run_match(tree, clique_graph(n), b, *painter, static_cast<int>(bound) + 1);
      ASSERT_TRUE(r.finished) << to_spec(tree) << " " << painter->name();
      EXPECT_LE(r.transcript.turns, bound) << to_spec(tree);
    }
  }
  EXPECT_EQ(leaf_recurrence_upper(path_graph(3), 3).integer_view, 12);
}

TEST(MinimaxPlayers, BuilderWinsInTheRestrictedValue) {
  for (auto& painter : battery(10)) {
    MinimaxBuilder b(path_graph(2), clique_graph(3), 3);
    const auto r = run_match(path_graph(2), clique_graph(3), b, *painter, 10);
    ASSERT_TRUE(r.finished);
    EXPECT_LE(r.transcript.turns, 3);
  }
}

TEST(MinimaxPlayers, PainterDelaysTheCliqueBuilder) {
  CliqueBuilder b;
  MinimaxPainter p;
  const auto r = run_match(path_graph(2), clique_graph(3), b, p, 10);
  // Blue twice; the third edge ends the game in either colour.
  EXPECT_EQ(r.state.edges()[0].color, Color::blue);
  EXPECT_EQ(r.state.edges()[1].color, Color::blue);
  EXPECT_EQ(r.transcript.turns, 3);
}

TEST(MinimaxPlayers, OptimalAgainstOptimalRealizesTheValue) {
  const int v = solve_restricted(path_graph(3), path_graph(2), 3).value;
  MinimaxBuilder b(path_graph(3), path_graph(2), 3);
  MinimaxPainter p(0);
  const auto r = run_match(path_graph(3), path_graph(2), b, p, 10);
  EXPECT_EQ(r.transcript.turns, v);
}

TEST(MinimaxPlayers, PainterRefusesOversizedBoards) {
  CliqueBuilder b;
  MinimaxPainter p(5);
  EXPECT_THROW(run_match(clique_graph(4), clique_graph(4), b, p, 100), StrategyError);
}

TEST(Registry, ResolvesNamesAndDerivesParameters) {
  EXPECT_EQ(make_builder("clique", path_graph(2), path_graph(2))->name(), "builder:clique");
  EXPECT_EQ(make_builder("builder:cycle-biclique", cycle_graph(3), biclique_graph(2, 2))->name(), "builder:cycle-biclique");
  EXPECT_EQ(make_builder("leaf-recursion", path_graph(3), clique_graph(3))->name(), "builder:leaf-recursion");
  EXPECT_EQ(make_builder("minimax", path_graph(2), clique_graph(3))->name(), "builder:minimax");
  EXPECT_THROW(make_builder("cycle-biclique", path_graph(3), clique_graph(3)), StrategyError);
  EXPECT_THROW(make_builder("leaf-recursion", path_graph(3), path_graph(3)), StrategyError);
  EXPECT_THROW(make_builder("nope", path_graph(3), path_graph(3)), StrategyError);
  for (const std::string& name : painter_names()) EXPECT_EQ(make_painter(name)->name(), name);
  EXPECT_THROW(make_painter("painter:nope"), StrategyError);
  StrategyParams params;
  params.seed = 9;
  EXPECT_EQ(make_painter("random", params)->seed(), 9U);
}

TEST(Clone, BranchesPlayIndependently) {
  GameState s(path_graph(3), clique_graph(3));
  LeafRecursionBuilder b(path_graph(3), 3);
  const BoardEdge first = b.next_move(s);
  auto copy = b.clone();
  GameState s2 = s;
  s.paint(s.propose_edge(first.u, first.v), Color::red);
  s2.paint(s2.propose_edge(first.u, first.v), Color::blue);
  const BoardEdge a = b.next_move(s);
  const BoardEdge c = copy->next_move(s2);
  EXPECT_TRUE(s.board().valid(a.u));
  EXPECT_TRUE(s2.board().valid(c.u));
}

}  // namespace
}  // namespace oramsey
