#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oramsey/match.hpp"
#include "oramsey/strategy.hpp"

namespace oramsey {

// A vertex as seen across the whole decision tree: every vertex is created at
// exactly one tree node and is shared by all branches below it.
struct TreeVertex {
  int node = 0;          // creating node
  int local_id = 0;      // handle id on the branches that contain it
  Placement::Kind kind = Placement::Kind::rightmost;
  int anchor_a = -1;     // global keys of the between() anchors
  int anchor_b = -1;
};

struct TreeNode {
  int id = 0;
  int parent = -1;
  std::optional<Color> via;  // painter colour on the edge from the parent
  int depth = 0;             // turns played before this node
  std::vector<int> created;  // global keys of vertices created by this node's move
  // Internal nodes: the proposed pair (global keys) and its ranks at the time.
  int u = -1;
  int v = -1;
  int u_rank = 0;
  int v_rank = 0;
  int child[2] = {-1, -1};   // [red, blue]
  // Leaves.
  Outcome winner = Outcome::ongoing;
  std::vector<int> order;    // final board order, global keys
  std::vector<int> witness;  // witness vertices, global keys

  bool leaf() const noexcept { return child[0] < 0 && child[1] < 0; }
};

struct DecisionTree {
  OrderedGraph red_target;
  OrderedGraph blue_target;
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::vector<TreeVertex> vertices;
  int max_depth = 0;
  std::size_t leaves = 0;
};

namespace detail {

inline int child_slot(Color c) { return c == Color::red ? 0 : 1; }

class TreeEnumerator {
 public:
  TreeEnumerator(DecisionTree& tree, int depth_cap, std::size_t node_cap)
      : tree_(tree), depth_cap_(depth_cap), node_cap_(node_cap) {}

  void explore(GameState& s, BuilderStrategy& builder, std::vector<int>& keys, int parent, std::optional<Color> via,
               std::vector<Color>& path) {
    if (tree_.nodes.size() >= node_cap_) throw StrategyError("game tree exceeds the node cap");
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.push_back({});
    {
      TreeNode& node = tree_.nodes.back();
      node.id = id;
      node.parent = parent;
      node.via = via;
      node.depth = s.turns();
    }
    if (parent >= 0) tree_.nodes[parent].child[child_slot(*via)] = id;
    tree_.max_depth = std::max(tree_.max_depth, s.turns());
    if (s.over()) {
      finish_leaf(s, keys, id);
      return;
    }
    if (s.turns() >= depth_cap_) {
      std::string seq;
      for (Color c : path) seq += color_code(c);
      throw StrategyError("builder did not win within " + std::to_string(depth_cap_) + " turns after painter colours '" +
                          seq + "'");
    }
    const std::size_t before = s.creations().size();
    const BoardEdge e = builder.next_move(s);
    for (std::size_t i = before; i < s.creations().size(); ++i) {
      const VertexCreation& vc = s.creations()[i];
      TreeVertex tv;
      tv.node = id;
      tv.local_id = vc.vertex.id;
      tv.kind = vc.placement.kind;
      if (vc.placement.kind == Placement::Kind::between) {
        tv.anchor_a = keys.at(vc.placement.a.id);
        tv.anchor_b = keys.at(vc.placement.b.id);
      }
      const int key = static_cast<int>(tree_.vertices.size());
      tree_.vertices.push_back(tv);
      if (static_cast<int>(keys.size()) != vc.vertex.id) throw Error("vertex ids are not sequential");
      keys.push_back(key);
      tree_.nodes[id].created.push_back(key);
    }
    if (s.over()) {
      finish_leaf(s, keys, id);
      return;
    }
    const PendingMove token = s.propose_edge(e.u, e.v);
    {
      TreeNode& node = tree_.nodes[id];
      node.u = keys.at(token.u.id);
      node.v = keys.at(token.v.id);
      node.u_rank = s.board().rank(token.u);
      node.v_rank = s.board().rank(token.v);
    }
    for (Color c : {Color::red, Color::blue}) {
      GameState branch = s;
      std::unique_ptr<BuilderStrategy> b = builder.clone();
      std::vector<int> branch_keys = keys;
      branch.paint(token, c);
      path.push_back(c);
      explore(branch, *b, branch_keys, id, c, path);
      path.pop_back();
    }
  }

 private:
  void finish_leaf(const GameState& s, const std::vector<int>& keys, int id) {
    TreeNode& node = tree_.nodes[id];
    node.winner = s.outcome();
    for (int r = 1; r <= s.board().size(); ++r) node.order.push_back(keys.at(s.board().at_rank(r).id));
    for (VertexHandle h : s.witness()) node.witness.push_back(keys.at(h.id));
    ++tree_.leaves;
  }

  DecisionTree& tree_;
  int depth_cap_;
  std::size_t node_cap_;
};

}  // namespace detail

// Plays the builder against every painter colour sequence. Throws when some
// branch is still undecided after depth_cap turns.
inline DecisionTree enumerate_game_tree(const BuilderStrategy& builder, const OrderedGraph& g1, const OrderedGraph& g2,
                                        int depth_cap, std::size_t node_cap = 1U << 22) {
  DecisionTree tree;
  tree.red_target = g1;
  tree.blue_target = g2;
  GameState s(g1, g2);
  std::unique_ptr<BuilderStrategy> b = builder.clone();
  std::vector<int> keys;
  std::vector<Color> path;
  detail::TreeEnumerator(tree, depth_cap, node_cap).explore(s, *b, keys, -1, std::nullopt, path);
  return tree;
}

// Integer vertex for every tree vertex, consistent across branches.
struct RestrictionAssignment {
  std::vector<int> position;  // by global key, 1-based
  int board_size = 0;         // N witnessing the restricted game
};

// Merges the final orders of all leaves into one linear order (a topological
// sort of their successor constraints, ties broken by creation order) and
// numbers it left to right. Two orders agree wherever they share vertices,
// because a shared vertex was created above both leaves and board order never
// changes.
inline RestrictionAssignment compute_restriction_bound(const DecisionTree& tree) {
  const std::size_t count = tree.vertices.size();
  std::vector<std::vector<int>> successors(count);
  std::vector<int> indegree(count, 0);
  std::vector<std::pair<int, int>> seen;
  for (const TreeNode& node : tree.nodes) {
    if (!node.leaf()) continue;
    for (std::size_t i = 1; i < node.order.size(); ++i) seen.emplace_back(node.order[i - 1], node.order[i]);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (const auto& [a, b] : seen) {
    successors[a].push_back(b);
    ++indegree[b];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t k = 0; k < count; ++k) {
    if (indegree[k] == 0) ready.push(static_cast<int>(k));
  }
  RestrictionAssignment a;
  a.position.assign(count, 0);
  int next = 0;
  while (!ready.empty()) {
    const int k = ready.top();
    ready.pop();
    a.position[k] = ++next;
    for (int s : successors[k]) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (next != static_cast<int>(count)) throw Error("leaf orders are inconsistent; no global vertex order exists");
  a.board_size = next;
  return a;
}

// Builder on the fixed board [N]: follows the tree along the colours painted
// so far and proposes the node's pair at its assigned integers.
class CompiledBuilder final : public BuilderStrategy {
 public:
  CompiledBuilder(std::shared_ptr<const DecisionTree> tree, RestrictionAssignment assignment)
      : tree_(std::move(tree)), assignment_(std::move(assignment)) {}

  BoardEdge next_move(GameState& s) override {
    const int n = assignment_.board_size;
    if (s.board().size() == 0) {
      for (int i = 0; i < n; ++i) s.new_vertex(Placement::rightmost());
    }
    if (s.board().size() != n) throw StrategyError("compiled builder expects a board of exactly N vertices");
    int node = 0;
    for (const ColoredEdge& e : s.edges()) {
      node = tree_->nodes[node].child[detail::child_slot(e.color)];
      if (node < 0) throw StrategyError("painted sequence leaves the compiled tree");
    }
    const TreeNode& at = tree_->nodes[node];
    if (at.leaf()) throw StrategyError("compiled tree reached a leaf but the game is not over");
    return {s.board().at_rank(assignment_.position[at.u]), s.board().at_rank(assignment_.position[at.v])};
  }

  std::unique_ptr<BuilderStrategy> clone() const override { return std::make_unique<CompiledBuilder>(*this); }
  std::string name() const override { return "builder:compiled"; }

  int board_size() const noexcept { return assignment_.board_size; }

 private:
  std::shared_ptr<const DecisionTree> tree_;
  RestrictionAssignment assignment_;
};

inline CompiledBuilder compile_to_integer_strategy(const DecisionTree& tree, const RestrictionAssignment& assignment) {
  return CompiledBuilder(std::make_shared<const DecisionTree>(tree), assignment);
}

// Painter colours leading from the root to a node.
inline std::vector<Color> colors_to(const DecisionTree& tree, int node) {
  std::vector<Color> out;
  for (int at = node; tree.nodes[at].parent >= 0; at = tree.nodes[at].parent) out.push_back(*tree.nodes[at].via);
  std::reverse(out.begin(), out.end());
  return out;
}

struct CompiledCheck {
  std::size_t branches = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> failures;  // colour sequences that disagreed
};

// Replays every branch against the compiled builder on [N] and compares the
// winner and the number of turns with the tree's leaf.
inline CompiledCheck verify_compiled(const DecisionTree& tree, const CompiledBuilder& compiled) {
  CompiledCheck check;
  for (const TreeNode& leaf : tree.nodes) {
    if (!leaf.leaf()) continue;
    ++check.branches;
    const std::vector<Color> colors = colors_to(tree, leaf.id);
    std::unique_ptr<BuilderStrategy> b = compiled.clone();
    ScriptedPainter painter(colors);
    bool ok = true;
    try {
      MatchResult m = run_match(tree.red_target, tree.blue_target, *b, painter, std::max(1, leaf.depth));
      ok = m.state.outcome() == leaf.winner && m.state.turns() == leaf.depth;
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) {
      ++check.mismatches;
      std::string seq;
      for (Color c : colors) seq += color_code(c);
      check.failures.push_back(seq);
    }
  }
  return check;
}

inline nlohmann::json tree_to_json(const DecisionTree& tree, const RestrictionAssignment* assignment = nullptr) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const TreeNode& n : tree.nodes) {
    nlohmann::json j;
    j["id"] = n.id;
    j["parent"] = n.parent >= 0 ? nlohmann::json(n.parent) : nlohmann::json(nullptr);
    j["color"] = n.via ? nlohmann::json(std::string(1, color_code(*n.via))) : nlohmann::json(nullptr);
    j["depth"] = n.depth;
    nlohmann::json created = nlohmann::json::array();
    for (int k : n.created) {
      const TreeVertex& tv = tree.vertices[k];
      nlohmann::json c{{"vertex", k}, {"placement", placement_name(tv.kind)}};
      if (tv.kind == Placement::Kind::between) c["between"] = {tv.anchor_a, tv.anchor_b};
      created.push_back(std::move(c));
    }
    j["created"] = std::move(created);
    if (n.leaf()) {
      const auto w = winner_color(n.winner);
      j["winner"] = w ? nlohmann::json(std::string(1, color_code(*w))) : nlohmann::json(nullptr);
      j["order"] = n.order;
      j["witness"] = n.witness;
    } else {
      j["pair"] = {n.u, n.v};
      j["ranks"] = {n.u_rank, n.v_rank};
      j["children"] = {n.child[0], n.child[1]};
    }
    nodes.push_back(std::move(j));
  }
  nlohmann::json out{{"red", to_spec(tree.red_target)},
                     {"blue", to_spec(tree.blue_target)},
                     {"max_depth", tree.max_depth},
                     {"leaves", tree.leaves},
                     {"vertices", tree.vertices.size()},
                     {"nodes", std::move(nodes)}};
  if (assignment != nullptr) {
    out["board_size"] = assignment->board_size;
    out["assignment"] = assignment->position;
  }
  return out;
}

}  // namespace oramsey
