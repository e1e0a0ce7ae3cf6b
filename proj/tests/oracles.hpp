#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// shares code with the library's search routines.

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "oramsey/ordered_graph.hpp"

namespace oramsey::oracle {

// Every ordered graph on n vertices, indexed by the bitmask of its pairs in
// lexicographic order.
inline std::vector<OrderedGraph> all_graphs(int n) {
  std::vector<Edge> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  }
  std::vector<OrderedGraph> out;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((mask >> p) & 1U) edges.push_back(pairs[p]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

// Calls f on every strictly increasing map [n] -> [m] until f returns true.
inline bool for_each_increasing_map(int n, int m, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> map(n);
  std::function<bool(int, int)> rec = [&](int t, int next) -> bool {
    if (t == n) return f(map);
    for (int h = next; h <= m - (n - 1 - t); ++h) {
      map[t] = h;
      if (rec(t + 1, h + 1)) return true;
    }
    return false;
  };
  return rec(0, 1);
}

template <class HasEdge>
bool brute_contains(const OrderedGraph& target, int host_size, HasEdge has_edge) {
  if (target.vertex_count() > host_size) return false;
  return for_each_increasing_map(target.vertex_count(), host_size, [&](const std::vector<int>& f) {
    for (const Edge& e : target.edges()) {
      if (!has_edge(f[e.u - 1], f[e.v - 1])) return false;
    }
    return true;
  });
}

inline bool brute_contains(const OrderedGraph& target, const OrderedGraph& host) {
  return brute_contains(target, host.vertex_count(), [&](int a, int b) { return host.has_edge(a, b); });
}

// Least number of consecutive independent intervals, over all 2^(n-1) cuts.
inline int brute_interval_chromatic(const OrderedGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  int best = n;
  for (std::uint32_t cuts = 0; cuts < (1U << (n - 1)); ++cuts) {
    std::vector<int> block(n + 1, 0);
    int b = 0;
    for (int v = 1; v <= n; ++v) {
      if (v > 1 && ((cuts >> (v - 2)) & 1U)) ++b;
      block[v] = b;
    }
    bool ok = true;
    for (const Edge& e : g.edges()) ok = ok && block[e.u] != block[e.v];
    if (ok) best = std::min(best, b + 1);
  }
  return best;
}

inline int brute_vertex_cover(const OrderedGraph& g) {
  const int n = g.vertex_count();
  int best = n;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool ok = true;
    for (const Edge& e : g.edges()) ok = ok && (((s >> (e.u - 1)) & 1U) || ((s >> (e.v - 1)) & 1U));
    if (ok) best = std::min(best, __builtin_popcount(s));
  }
  return best;
}

// Plain minimax for the game on [n]: colour[p] is 0, 1 (red) or 2 (blue) for
// pair p in lexicographic order. Memoised on the full colour vector only.
class BruteGame {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  BruteGame(OrderedGraph red, OrderedGraph blue, int n) : red_(std::move(red)), blue_(std::move(blue)), n_(n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) pairs_.push_back({i, j});
    }
  }

  int value() {
    std::vector<std::uint8_t> colour(pairs_.size(), 0);
    return value(colour);
  }

  bool won(const std::vector<std::uint8_t>& colour) const {
    return has(red_, colour, 1) || has(blue_, colour, 2);
  }

 private:
  bool has(const OrderedGraph& target, const std::vector<std::uint8_t>& colour, std::uint8_t c) const {
    return brute_contains(target, n_, [&](int a, int b) {
      if (a > b) std::swap(a, b);
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        if (pairs_[p].u == a && pairs_[p].v == b) return colour[p] == c;
      }
      return false;
    });
  }

  int value(std::vector<std::uint8_t>& colour) {
    if (won(colour)) return 0;
    auto it = memo_.find(colour);
    if (it != memo_.end()) return it->second;
    int best = kInfinite;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (colour[p] != 0) continue;
      int worst = 0;
      for (std::uint8_t c : {1, 2}) {
        colour[p] = c;
        worst = std::max(worst, value(colour));
        colour[p] = 0;
      }
      if (worst != kInfinite) best = std::min(best, worst + 1);
    }
    memo_[colour] = best;
    return best;
  }

  OrderedGraph red_;
  OrderedGraph blue_;
  int n_;
  std::vector<Edge> pairs_;
  std::map<std::vector<std::uint8_t>, int> memo_;
};

// Least n <= limit with every 2-colouring of K_n holding red g1 or blue g2,
// by listing all colourings.
inline std::optional<int> brute_ordered_ramsey(const OrderedGraph& g1, const OrderedGraph& g2, int limit) {
  for (int n = 1; n <= limit; ++n) {
    std::vector<Edge> pairs;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
    }
    bool all = true;
    for (std::uint64_t mask = 0; all && mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<Edge> red, blue;
      for (std::size_t p = 0; p < pairs.size(); ++p) ((mask >> p) & 1U ? red : blue).push_back(pairs[p]);
      all = brute_contains(g1, OrderedGraph(n, red)) || brute_contains(g2, OrderedGraph(n, blue));
    }
    if (all) return n;
  }
  return std::nullopt;
}

}  // namespace oramsey::oracle
