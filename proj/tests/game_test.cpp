#include "oramsey/game.hpp"
#include "oramsey/match.hpp"
#include "oramsey/strategy.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace oramsey {
namespace {

TEST(Board, InsertionKeepsExistingOrder) {
  Board b;
  const VertexHandle x = b.insert(Placement::rightmost());
  EXPECT_EQ(b.rank(x), 1);
  const VertexHandle y = b.insert(Placement::rightmost());
  const VertexHandle z = b.insert(Placement::between(x, y));
  EXPECT_TRUE(b.precedes(x, z));
  EXPECT_TRUE(b.precedes(z, y));
  const VertexHandle w = b.insert(Placement::leftmost());
  EXPECT_EQ(b.rank(w), 1);
  EXPECT_EQ(b.rank(x), 2);
  EXPECT_EQ(b.rank(z), 3);
  EXPECT_EQ(b.rank(y), 4);
  EXPECT_EQ(b.at_rank(3), z);
}

TEST(Board, BetweenNeedNotBeAdjacentAndAppendsAtTheGapEnd) {
  Board b;
  const VertexHandle x = b.insert(Placement::rightmost());
  const VertexHandle m = b.insert(Placement::rightmost());
  const VertexHandle y = b.insert(Placement::rightmost());
  const VertexHandle z = b.insert(Placement::between(x, y));
  EXPECT_TRUE(b.precedes(m, z));
  EXPECT_TRUE(b.precedes(z, y));
}

TEST(Board, BetweenRejectsReversedOrUnknownHandles) {
  Board b;
  const VertexHandle x = b.insert(Placement::rightmost());
  const VertexHandle y = b.insert(Placement::rightmost());
  EXPECT_THROW(b.insert(Placement::between(y, x)), GameError);
  EXPECT_THROW(b.insert(Placement::between(x, x)), GameError);
  EXPECT_THROW(b.insert(Placement::between(x, VertexHandle{7})), GameError);
  EXPECT_EQ(b.size(), 2);
}

TEST(Board, RandomInsertionsMatchAReferenceList) {
  std::mt19937_64 rng(5);
  Board b;
  std::vector<int> reference;  // ids in order
  for (int step = 0; step < 300; ++step) {
    const int m = b.size();
    const int slot = static_cast<int>(rng() % (m + 1));
    VertexHandle h;
    if (slot == 0) {
      h = b.insert(Placement::leftmost());
    } else if (slot == m) {
      h = b.insert(Placement::rightmost());
    } else {
      h = b.insert(Placement::between(b.at_rank(1 + static_cast<int>(rng() % slot)), b.at_rank(slot + 1)));
    }
    reference.insert(reference.begin() + slot, h.id);
  }
  for (int r = 1; r <= b.size(); ++r) ASSERT_EQ(b.at_rank(r).id, reference[r - 1]);
}

TEST(GameState, ProposeErrors) {
  GameState s(path_graph(3), path_graph(3));
  const VertexHandle a = s.new_vertex(Placement::rightmost());
  const VertexHandle b = s.new_vertex(Placement::rightmost());
  EXPECT_THROW(s.propose_edge(a, a), GameError);
  EXPECT_THROW(s.propose_edge(a, VertexHandle{9}), GameError);
  const PendingMove t = s.propose_edge(b, a);
  EXPECT_EQ(t.u, a);  // normalized to board order
  EXPECT_EQ(t.v, b);
  EXPECT_THROW(s.propose_edge(a, b), GameError);  // still pending
  s.paint(t, Color::red);
  EXPECT_THROW(s.propose_edge(a, b), GameError);  // duplicate
  EXPECT_THROW(s.paint(t, Color::blue), GameError);  // no pending move
  EXPECT_EQ(s.turns(), 1);
}

TEST(GameState, RedPathWinWithWitness) {
  GameState s(path_graph(3), path_graph(3));
  const VertexHandle a = s.new_vertex(Placement::rightmost());
  const VertexHandle c = s.new_vertex(Placement::rightmost());
  const VertexHandle b = s.new_vertex(Placement::between(a, c));
  s.paint(s.propose_edge(a, b), Color::red);
  EXPECT_FALSE(s.over());
  s.paint(s.propose_edge(b, c), Color::red);
  EXPECT_EQ(s.outcome(), Outcome::red_win);
  EXPECT_EQ(s.witness(), (std::vector<VertexHandle>{a, b, c}));
  EXPECT_EQ(s.witness_ranks(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(s.turns(), 2);
  const VertexHandle d = s.new_vertex(Placement::rightmost());
  EXPECT_THROW(s.propose_edge(a, d), GameError);
}

TEST(GameState, SingleEdgeRedTargetWinsAtTurnOne) {
  GameState s(path_graph(2), clique_graph(3));
  const VertexHandle a = s.new_vertex(Placement::rightmost());
  const VertexHandle b = s.new_vertex(Placement::rightmost());
  s.paint(s.propose_edge(a, b), Color::red);
  EXPECT_EQ(s.outcome(), Outcome::red_win);
  EXPECT_EQ(s.turns(), 1);
}

TEST(GameState, BlueTriangleCompletesOnThirdEdge) {
  GameState s(path_graph(2), clique_graph(3));
  std::vector<VertexHandle> v;
  for (int i = 0; i < 3; ++i) v.push_back(s.new_vertex(Placement::rightmost()));
  s.paint(s.propose_edge(v[0], v[1]), Color::blue);
  s.paint(s.propose_edge(v[0], v[2]), Color::blue);
  EXPECT_FALSE(s.over());
  s.paint(s.propose_edge(v[1], v[2]), Color::blue);
  EXPECT_EQ(s.outcome(), Outcome::blue_win);
  EXPECT_EQ(s.turns(), 3);
}

TEST(GameState, OrderMattersForDetection) {
  // Red target 1-2, 1-3 needs a common left endpoint.
  GameState s(OrderedGraph(3, {{1, 2}, {1, 3}}), clique_graph(4));
  std::vector<VertexHandle> v;
  for (int i = 0; i < 3; ++i) v.push_back(s.new_vertex(Placement::rightmost()));
  s.paint(s.propose_edge(v[0], v[2]), Color::red);
  s.paint(s.propose_edge(v[1], v[2]), Color::red);
  EXPECT_FALSE(s.over());
  s.paint(s.propose_edge(v[0], v[1]), Color::red);
  EXPECT_EQ(s.outcome(), Outcome::red_win);
}

TEST(GameState, EdgelessTargetWinsAtTurnZeroOnceTheBoardIsBigEnough) {
  GameState s(OrderedGraph::edgeless(2), clique_graph(3));
  EXPECT_FALSE(s.over());
  s.new_vertex(Placement::rightmost());
  EXPECT_FALSE(s.over());
  s.new_vertex(Placement::leftmost());
  EXPECT_EQ(s.outcome(), Outcome::red_win);
  EXPECT_EQ(s.turns(), 0);
  GameState zero(OrderedGraph::edgeless(0), path_graph(2));
  EXPECT_EQ(zero.outcome(), Outcome::red_win);
}

TEST(GameState, DegreesCountBothColours) {
  GameState s(clique_graph(4), clique_graph(4));
  std::vector<VertexHandle> v;
  for (int i = 0; i < 3; ++i) v.push_back(s.new_vertex(Placement::rightmost()));
  s.paint(s.propose_edge(v[0], v[1]), Color::red);
  s.paint(s.propose_edge(v[0], v[2]), Color::blue);
  EXPECT_EQ(s.right_degree(v[0]), 2);
  EXPECT_EQ(s.left_degree(v[2]), 1);
  EXPECT_EQ(s.left_degree(v[0]), 0);
  EXPECT_EQ(color_subgraph(s, Color::blue), OrderedGraph(3, {{1, 3}}));
}

// After every paint the incremental status must equal a from-scratch
// brute-force containment check of both colour classes.
TEST(GameState, IncrementalDetectionMatchesFromScratch) {
  std::mt19937_64 rng(2024);
  const std::vector<OrderedGraph> targets = {path_graph(3), cycle_graph(4), OrderedGraph(3, {{1, 3}}),
                                             star_graph(1, 2), biclique_graph(2, 2), OrderedGraph(4, {{1, 4}, {2, 3}})};
  int games_with_a_win = 0;
  for (int game = 0; game < 300; ++game) {
    const OrderedGraph& red = targets[rng() % targets.size()];
    const OrderedGraph& blue = targets[rng() % targets.size()];
    GameState s(red, blue);
    RandomBuilder builder(rng());
    RandomPainter painter(rng());
    while (!s.over() && s.turns() < 30) {
      const BoardEdge e = builder.next_move(s);
      if (s.over()) {
        // A fresh vertex completed a target with an isolated vertex.
        const Color w = *winner_color(s.outcome());
        ASSERT_TRUE(s.target(w).has_isolated_vertex());
        ASSERT_TRUE(oracle::brute_contains(s.target(w), color_subgraph(s, w)));
        break;
      }
      const PendingMove t = s.propose_edge(e.u, e.v);
      s.paint(t, painter.choose_color(s, t.u, t.v));
      const OrderedGraph r = color_subgraph(s, Color::red);
      const OrderedGraph b = color_subgraph(s, Color::blue);
      const bool red_now = oracle::brute_contains(red, r);
      const bool blue_now = oracle::brute_contains(blue, b);
      const Color last = s.edges().back().color;
      if (s.over()) {
        ASSERT_EQ(winner_color(s.outcome()), last);
        ASSERT_TRUE(last == Color::red ? red_now : blue_now);
      } else {
        ASSERT_FALSE(red_now);
        ASSERT_FALSE(blue_now);
      }
    }
    if (s.over()) ++games_with_a_win;
  }
  EXPECT_GT(games_with_a_win, 200);
}

TEST(RunMatch, SingleEdgeTargetsEndAtTurnOne) {
  for (Color c : {Color::red, Color::blue}) {
    CliqueBuilder builder;
    ConstantPainter painter(c);
    const MatchResult r = run_match(path_graph(2), path_graph(2), builder, painter, 10);
    EXPECT_TRUE(r.finished);
    EXPECT_EQ(r.transcript.turns, 1);
    EXPECT_EQ(r.transcript.winner, c);
  }
}

TEST(RunMatch, CliqueBuilderAgainstAllBlue) {
  CliqueBuilder builder;
  ConstantPainter painter(Color::blue);
  const MatchResult r = run_match(path_graph(2), clique_graph(3), builder, painter, 10);
  EXPECT_EQ(r.transcript.winner, Color::blue);
  EXPECT_EQ(r.transcript.turns, 3);
  EXPECT_EQ(r.transcript.witness, (std::vector<int>{1, 2, 3}));
}

TEST(RunMatch, ZeroTurnCapIsRejected) {
  CliqueBuilder builder;
  ConstantPainter painter(Color::red);
  EXPECT_THROW(run_match(path_graph(3), path_graph(3), builder, painter, 0), GameError);
}

TEST(RunMatch, TurnCapLeavesAnUnfinishedTranscript) {
  CliqueBuilder builder;
  RandomPainter painter(3);
  const MatchResult r = run_match(clique_graph(4), clique_graph(4), builder, painter, 5);
  EXPECT_FALSE(r.finished);
  EXPECT_EQ(r.transcript.turns, 5);
  EXPECT_FALSE(r.transcript.winner);
  EXPECT_EQ(r.transcript.seed, 3U);
}

class BrokenBuilder final : public BuilderStrategy {
 public:
  BoardEdge next_move(GameState& s) override {
    if (s.board().size() == 0) {
      s.new_vertex(Placement::rightmost());
      s.new_vertex(Placement::rightmost());
    }
    return {s.board().at_rank(1), s.board().at_rank(2)};  // repeats forever
  }
  std::unique_ptr<BuilderStrategy> clone() const override { return std::make_unique<BrokenBuilder>(*this); }
  std::string name() const override { return "builder:broken"; }
};

TEST(RunMatch, InvalidBuilderMovesSurface) {
  BrokenBuilder builder;
  ConstantPainter painter(Color::red);
  EXPECT_THROW(run_match(path_graph(3), path_graph(3), builder, painter, 10), StrategyError);
}

TEST(RunMatch, DeterministicGivenSeeds) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomBuilder b1(seed), b2(seed);
    RandomPainter p1(seed + 100), p2(seed + 100);
    const auto r1 = run_match(cycle_graph(4), path_graph(4), b1, p1, 100);
    const auto r2 = run_match(cycle_graph(4), path_graph(4), b2, p2, 100);
    EXPECT_EQ(r1.transcript, r2.transcript);
  }
}

TEST(Transcript, RoundTripsAndMatchesTheSchema) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomBuilder builder(seed);
    RandomPainter painter(seed);
    const auto r = run_match(path_graph(3), cycle_graph(4), builder, painter, seed % 7 == 0 ? 3 : 60, "path:3",
                             "cycle:4");
    const std::string text = export_transcript(r.transcript);
    EXPECT_EQ(import_transcript(text), r.transcript);
  }
  CliqueBuilder builder;
  ConstantPainter painter(Color::blue);
  const auto r = run_match(path_graph(2), clique_graph(3), builder, painter, 10, "path:2", "clique:3");
  const auto j = nlohmann::json::parse(export_transcript(r.transcript));
  EXPECT_EQ(j["red"], "path:2");
  EXPECT_EQ(j["blue"], "clique:3");
  EXPECT_TRUE(j["seed"].is_null());
  EXPECT_EQ(j["moves"], nlohmann::json::parse(R"([[1,2,"b"],[1,3,"b"],[2,3,"b"]])"));
  EXPECT_EQ(j["winner"], "b");
  EXPECT_EQ(j["turns"], 3);
  EXPECT_EQ(j["witness"], nlohmann::json::parse("[1,2,3]"));
}

TEST(Transcript, ImportRejectsCorruption) {
  const std::string good =
      R"({"red":"path:2","blue":"clique:3","seed":null,"moves":[[1,2,"b"],[1,3,"b"],[2,3,"b"]],"winner":"b","turns":3,"witness":[1,2,3]})";
  EXPECT_NO_THROW(import_transcript(good));
  const std::vector<std::string> bad = {
      "not json",
      "[]",
      R"({"red":"path:2","blue":"clique:3","seed":null,"moves":[[1,2,"b"],[1,2,"r"]],"winner":"r","turns":2,"witness":[1,2]})",
      R"({"red":"path:2","blue":"clique:3","seed":null,"moves":[[0,2,"b"]],"winner":null,"turns":1,"witness":null})",
      R"({"red":"path:2","blue":"clique:3","seed":null,"moves":[[1,2,"x"]],"winner":null,"turns":1,"witness":null})",
      R"({"red":"path:2","blue":"clique:3","seed":null,"moves":[[1,2,"b"]],"winner":null,"turns":2,"witness":null})",
      R"({"red":"path:2","blue":"clique:3","seed":null,"moves":[[1,2,"b"],[1,3,"b"],[2,3,"b"]],"winner":"r","turns":3,"witness":[1,2]})",
      R"({"red":"path:2","blue":"clique:3","seed":null,"moves":[[1,2,"b"],[1,3,"b"],[2,3,"b"]],"winner":"b","turns":3,"witness":[1,2,4]})",
      R"({"red":"path:2","blue":"clique:3","seed":null,"moves":[[1,2,"r"],[1,3,"b"]],"winner":"r","turns":2,"witness":[1,2]})",
      R"({"red":"path:2","blue":"clique:3","seed":null,"moves":[[1,1,"b"]],"winner":null,"turns":1,"witness":null})",
      R"({"red":"bogus","blue":"clique:3","seed":null,"moves":[],"winner":null,"turns":0,"witness":null})",
      R"({"blue":"clique:3","seed":null,"moves":[],"winner":null,"turns":0,"witness":null})",
  };
  for (const std::string& text : bad) EXPECT_THROW(import_transcript(text), TranscriptError) << text;
}

}  // namespace
}  // namespace oramsey
