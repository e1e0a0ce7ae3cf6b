#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oramsey/board.hpp"
#include "oramsey/containment.hpp"
#include "oramsey/error.hpp"
#include "oramsey/ordered_graph.hpp"

namespace oramsey {

// Value of a restricted game Builder cannot force (board below r_<).
inline constexpr int kNoForcedWin = std::numeric_limits<int>::max();

// Largest board the bitmask search supports: C(11, 2) = 55 pairs.
inline constexpr int kMaxSolverBoard = 11;

// Pairs (i, j), 1 <= i < j <= N, numbered in lexicographic order.
class PairIndex {
 public:
  explicit PairIndex(int n) : n_(n), index_(static_cast<std::size_t>(n + 1) * (n + 1), -1) {
    if (n < 1 || n > kMaxSolverBoard) {
      throw Error("board size must be in 1.." + std::to_string(kMaxSolverBoard) + " for exact search");
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        index_[slot(i, j)] = index_[slot(j, i)] = static_cast<int>(pairs_.size());
        pairs_.push_back({i, j});
      }
    }
    reversed_.resize(pairs_.size());
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      reversed_[p] = index(n + 1 - pairs_[p].v, n + 1 - pairs_[p].u);
    }
  }

  int board_size() const noexcept { return n_; }
  int count() const noexcept { return static_cast<int>(pairs_.size()); }
  int index(int i, int j) const noexcept { return index_[slot(i, j)]; }
  Edge pair(int p) const noexcept { return pairs_[p]; }

  // Image of a pair mask under i -> N+1-i.
  std::uint64_t reverse(std::uint64_t mask) const noexcept {
    std::uint64_t out = 0;
    while (mask != 0) {
      const int p = std::countr_zero(mask);
      mask &= mask - 1;
      out |= std::uint64_t{1} << reversed_[p];
    }
    return out;
  }

 private:
  std::size_t slot(int i, int j) const noexcept { return static_cast<std::size_t>(i) * (n_ + 1) + j; }

  int n_;
  std::vector<int> index_;
  std::vector<Edge> pairs_;
  std::vector<int> reversed_;
};

// One colour class of a position on [N], as a HostGraph.
class MaskHost {
 public:
  MaskHost(const PairIndex& pairs, std::uint64_t mask) : pairs_(&pairs), mask_(mask) {}
  int vertex_count() const noexcept { return pairs_->board_size(); }
  bool has_edge(int i, int j) const noexcept {
    if (i == j) return false;
    return ((mask_ >> pairs_->index(i, j)) & 1U) != 0;
  }

 private:
  const PairIndex* pairs_;
  std::uint64_t mask_;
};

// A colouring of some pairs of [N].
struct Position {
  std::uint64_t red = 0;
  std::uint64_t blue = 0;

  std::uint64_t colored() const noexcept { return red | blue; }
  std::uint64_t& mask(Color c) noexcept { return c == Color::red ? red : blue; }
  std::uint64_t mask(Color c) const noexcept { return c == Color::red ? red : blue; }

  Position with(int pair, Color c) const noexcept {
    Position p = *this;
    p.mask(c) |= std::uint64_t{1} << pair;
    return p;
  }

  friend bool operator==(const Position&, const Position&) = default;
};

struct PositionHash {
  std::size_t operator()(const Position& p) const noexcept {
    std::uint64_t x = p.red * 0x9E3779B97F4A7C15ULL ^ (p.blue + 0x632BE59BD9B4E019ULL + (p.red << 6) + (p.red >> 2));
    x ^= x >> 31;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    return static_cast<std::size_t>(x);
  }
};

struct SolverOptions {
  std::uint64_t node_budget = 200'000'000;
  bool memo = true;
  // Merge positions related by order reversal and/or colour swap when the
  // target pair is invariant under that map.
  bool symmetry = true;
};

struct PlayedPair {
  int u = 0;
  int v = 0;
  Color color = Color::red;
};

struct SolveResult {
  int value = kNoForcedWin;  // exact when complete
  bool complete = false;
  int lower = 0;             // proven bounds; equal to value when complete
  int upper = kNoForcedWin;
  std::vector<PlayedPair> principal_variation;
  std::uint64_t nodes = 0;
  std::size_t memo_entries = 0;
  int board_size = 0;
};

// Exact minimax for the game on [N]:
//   value(P) = 0 if P holds red G1 or blue G2,
//   value(P) = 1 + min over uncoloured pairs of max over colours of value(P+e).
//
// The search answers "can Builder force a win within d turns?" with a
// transposition table of proven lower/upper bounds, and iterative deepening
// on d turns that into the exact value. Builder moves that win immediately
// under one colour are tried first; a painter colour that completes a Builder
// target is never explored further.
class RestrictedSolver {
 public:
  RestrictedSolver(OrderedGraph red_target, OrderedGraph blue_target, int board_size, SolverOptions options = {})
      : red_(std::move(red_target)), blue_(std::move(blue_target)), pairs_(board_size), options_(options) {
    if (options_.symmetry) {
      const OrderedGraph rr = reverse(red_);
      const OrderedGraph rb = reverse(blue_);
      reverse_ok_ = rr == red_ && rb == blue_;
      swap_ok_ = red_ == blue_;
      reverse_swap_ok_ = rr == blue_;
    }
  }

  const PairIndex& pairs() const noexcept { return pairs_; }
  int board_size() const noexcept { return pairs_.board_size(); }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::size_t memo_entries() const noexcept { return memo_.size(); }
  const OrderedGraph& target(Color c) const noexcept { return c == Color::red ? red_ : blue_; }

  bool won(const Position& p) const {
    return contains(red_, MaskHost(pairs_, p.red)).has_value() ||
           contains(blue_, MaskHost(pairs_, p.blue)).has_value();
  }

  // Does colouring `pair` with c create a copy of the colour-c target through
  // that pair? Assumes p itself is not won.
  bool completes(const Position& p, int pair, Color c) const {
    const OrderedGraph& t = target(c);
    if (t.edge_count() == 0) return false;
    const MaskHost host(pairs_, p.mask(c) | (std::uint64_t{1} << pair));
    const Edge e = pairs_.pair(pair);
    return EmbeddingSearch(t, host).find_through(e.u, e.v).has_value();
  }

  // Exact value; kNoForcedWin when Builder cannot force a win on [N].
  int value(const Position& p) {
    if (won(p)) return 0;
    return value_unwon(p);
  }

  // Lexicographically first optimal pair (1-based ranks).
  Edge best_builder_move(const Position& p) {
    if (won(p)) throw GameError("game already won");
    const int v = value_unwon(p);
    const std::uint64_t free = free_mask(p);
    if (free == 0) throw GameError("no uncoloured pair left");
    if (v == kNoForcedWin) return pairs_.pair(std::countr_zero(free));
    for (int e = 0; e < pairs_.count(); ++e) {
      if (((free >> e) & 1U) == 0) continue;
      const int worst = std::max(child_value(p, e, Color::red), child_value(p, e, Color::blue));
      if (worst != kNoForcedWin && worst + 1 == v) return pairs_.pair(e);
    }
    throw Error("solver inconsistency: no move attains the value");
  }

  // Colour maximising the remaining game length; red on ties.
  Color best_color(const Position& p, int u, int v) {
    if (won(p)) throw GameError("game already won");
    const int n = board_size();
    if (u < 1 || v < 1 || u > n || v > n) throw GameError("pair is not an uncoloured pair of the board");
    const int e = pairs_.index(u, v);
    if (e < 0 || ((p.colored() >> e) & 1U) != 0) throw GameError("pair is not an uncoloured pair of the board");
    return child_value(p, e, Color::red) >= child_value(p, e, Color::blue) ? Color::red : Color::blue;
  }

  SolveResult solve() {
    SolveResult r;
    r.board_size = board_size();
    const Position root{};
    try {
      r.value = value(root);
      r.complete = true;
      r.lower = r.upper = r.value;
      Position p = root;
      if (r.value != kNoForcedWin) {
        while (!won(p)) {
          const Edge e = best_builder_move(p);
          const Color c = best_color(p, e.u, e.v);
          r.principal_variation.push_back({e.u, e.v, c});
          p = p.with(pairs_.index(e.u, e.v), c);
        }
      }
    } catch (const BudgetExceeded& b) {
      r.complete = false;
      r.lower = b.lower();
      r.upper = b.upper();
    }
    r.nodes = nodes_;
    r.memo_entries = memo_.size();
    return r;
  }

 private:
  struct Bounds {
    std::uint8_t lo = 0;
    std::uint8_t hi = kUnknown;
  };
  static constexpr std::uint8_t kUnknown = 255;  // as hi: not proven; as lo: no forced win

  std::uint64_t free_mask(const Position& p) const noexcept {
    const int n = pairs_.count();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return all & ~p.colored();
  }

  int child_value(const Position& p, int e, Color c) {
    if (completes(p, e, c)) return 0;
    return value_unwon(p.with(e, c));
  }

  Position canonical(const Position& p) const {
    Position best = p;
    auto consider = [&best](Position q) {
      if (q.red < best.red || (q.red == best.red && q.blue < best.blue)) best = q;
    };
    if (reverse_ok_ || reverse_swap_ok_) {
      const Position r{pairs_.reverse(p.red), pairs_.reverse(p.blue)};
      if (reverse_ok_) consider(r);
      if (reverse_swap_ok_) consider({r.blue, r.red});
    }
    if (swap_ok_) consider({p.blue, p.red});
    return best;
  }

  int value_unwon(const Position& p) {
    const int remaining = std::popcount(free_mask(p));
    int d = 1;
    if (options_.memo) {
      auto it = memo_.find(canonical(p));
      if (it != memo_.end()) {
        if (it->second.lo == kUnknown) return kNoForcedWin;
        if (it->second.hi != kUnknown && it->second.hi == it->second.lo) return it->second.hi;
        d = std::max<int>(d, it->second.lo);
      }
    }
    for (; d <= remaining; ++d) {
      root_lower_ = d;
      if (wins_within(p, d)) return d;
    }
    if (options_.memo) memo_[canonical(p)].lo = kUnknown;
    return kNoForcedWin;
  }

  // p is not won. True iff Builder can force a win within d more turns.
  bool wins_within(const Position& p, int d) {
    if (d <= 0) return false;
    if (++nodes_ > options_.node_budget) {
      throw BudgetExceeded("node budget exhausted", root_lower_, kNoForcedWin);
    }
    const std::uint64_t free = free_mask(p);
    if (free == 0) return false;
    Position key;
    if (options_.memo) {
      key = canonical(p);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        if (it->second.lo == kUnknown || it->second.lo > d) return false;
        if (it->second.hi != kUnknown && it->second.hi <= d) return true;
      }
    }
    const bool result = search(p, d, free);
    if (options_.memo) {
      Bounds& b = memo_[key];
      if (result) {
        if (b.hi == kUnknown || b.hi > d) b.hi = static_cast<std::uint8_t>(d);
      } else if (b.lo != kUnknown && b.lo < d + 1) {
        b.lo = static_cast<std::uint8_t>(d + 1);
      }
    }
    return result;
  }

  bool search(const Position& p, int d, std::uint64_t free) {
    // forcing[e]: the colour Painter must avoid on e (it completes a target).
    std::vector<std::pair<int, Color>> forcing;
    std::vector<int> quiet;
    for (std::uint64_t rest = free; rest != 0; rest &= rest - 1) {
      const int e = std::countr_zero(rest);
      const bool red_wins = completes(p, e, Color::red);
      const bool blue_wins = completes(p, e, Color::blue);
      if (red_wins && blue_wins) return true;
      if (red_wins) {
        forcing.emplace_back(e, Color::blue);
      } else if (blue_wins) {
        forcing.emplace_back(e, Color::red);
      } else {
        quiet.push_back(e);
      }
    }
    if (d == 1) return false;
    for (const auto& [e, reply] : forcing) {
      if (wins_within(p.with(e, reply), d - 1)) return true;
    }
    for (int e : quiet) {
      if (wins_within(p.with(e, Color::red), d - 1) && wins_within(p.with(e, Color::blue), d - 1)) return true;
    }
    return false;
  }

  OrderedGraph red_;
  OrderedGraph blue_;
  PairIndex pairs_;
  SolverOptions options_;
  bool reverse_ok_ = false;
  bool swap_ok_ = false;
  bool reverse_swap_ok_ = false;
  std::unordered_map<Position, Bounds, PositionHash> memo_;
  std::uint64_t nodes_ = 0;
  int root_lower_ = 0;
};

// r_o(G1, G2; N).
inline SolveResult solve_restricted(const OrderedGraph& g1, const OrderedGraph& g2, int board_size,
                                    SolverOptions options = {}) {
  if (board_size < std::max(g1.vertex_count(), g2.vertex_count())) {
    throw Error("board must have at least as many vertices as each target");
  }
  RestrictedSolver solver(g1, g2, board_size, options);
  return solver.solve();
}

// ---------------------------------------------------------------------------

struct RamseyResult {
  std::optional<int> value;  // least N, if found within the limit
  std::uint64_t nodes = 0;
};

namespace detail {

// Looks for a colouring of K_N with neither red g1 nor blue g2. Pairs are
// coloured in colexicographic order so small sub-cliques close early.
class AvoidingColoringSearch {
 public:
  AvoidingColoringSearch(const OrderedGraph& g1, const OrderedGraph& g2, int n, std::uint64_t budget)
      : solver_(g1, g2, n, {budget, false, false}), budget_(budget) {
    const PairIndex& idx = solver_.pairs();
    for (int j = 2; j <= n; ++j) {
      for (int i = 1; i < j; ++i) order_.push_back(idx.index(i, j));
    }
  }

  bool exists(std::uint64_t& nodes) {
    if (solver_.won(Position{})) return false;
    const bool found = extend(Position{}, 0, nodes);
    return found;
  }

 private:
  bool extend(const Position& p, std::size_t k, std::uint64_t& nodes) {
    if (k == order_.size()) return true;
    if (++nodes > budget_) throw BudgetExceeded("ordered Ramsey enumeration budget exhausted", 0, 0);
    for (Color c : {Color::red, Color::blue}) {
      if (solver_.completes(p, order_[k], c)) continue;
      if (extend(p.with(order_[k], c), k + 1, nodes)) return true;
    }
    return false;
  }

  RestrictedSolver solver_;
  std::uint64_t budget_;
  std::vector<int> order_;
};

}  // namespace detail

// Least N <= max_board such that every red/blue colouring of ordered K_N has
// a red g1 or a blue g2.
inline RamseyResult ordered_ramsey_number(const OrderedGraph& g1, const OrderedGraph& g2, int max_board,
                                          std::uint64_t budget = 2'000'000'000ULL) {
  if (max_board > kMaxSolverBoard) {
    throw Error("max board " + std::to_string(max_board) + " exceeds the enumeration limit " +
                std::to_string(kMaxSolverBoard));
  }
  RamseyResult r;
  for (int n = 1; n <= max_board; ++n) {
    detail::AvoidingColoringSearch search(g1, g2, n, budget);
    if (!search.exists(r.nodes)) {
      r.value = n;
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

struct StabilizationEntry {
  int board_size = 0;
  SolveResult result;
};

struct StabilizationScan {
  std::vector<StabilizationEntry> entries;
  bool non_increasing = true;
  // Least scanned N from which the value stays constant to the end of the range.
  std::optional<int> stable_from;
};

inline StabilizationScan stabilization_scan(const OrderedGraph& g1, const OrderedGraph& g2, int first, int last,
                                            SolverOptions options = {}) {
  StabilizationScan scan;
  for (int n = first; n <= last; ++n) {
    SolveResult r = solve_restricted(g1, g2, n, options);
    if (!r.complete) throw BudgetExceeded("budget exhausted at board " + std::to_string(n), r.lower, r.upper);
    scan.entries.push_back({n, std::move(r)});
  }
  for (std::size_t i = 1; i < scan.entries.size(); ++i) {
    if (scan.entries[i].result.value > scan.entries[i - 1].result.value) scan.non_increasing = false;
  }
  if (!scan.entries.empty()) {
    std::size_t i = scan.entries.size() - 1;
    while (i > 0 && scan.entries[i - 1].result.value == scan.entries.back().result.value) --i;
    scan.stable_from = scan.entries[i].board_size;
  }
  return scan;
}

}  // namespace oramsey
