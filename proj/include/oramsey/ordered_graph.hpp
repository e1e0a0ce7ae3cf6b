#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oramsey/error.hpp"

namespace oramsey {

// An edge {u, v} of an ordered graph, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Ordered graph on vertices 1..n. The edge list is sorted and free of loops
// and duplicates; the adjacency matrix mirrors it.
class OrderedGraph {
 public:
  OrderedGraph() = default;

  OrderedGraph(int n, std::vector<Edge> edges) : n_(n), adjacency_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
    for (Edge& e : edges) {
      if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 1 || e.v > n) {
        throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " has an endpoint outside 1.." + std::to_string(n));
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const Edge& e : edges_) {
      adjacency_[index(e.u, e.v)] = 1;
      adjacency_[index(e.v, e.u)] = 1;
    }
  }

  static OrderedGraph edgeless(int n) { return OrderedGraph(n, {}); }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // 1-based; false for out-of-range vertices.
  bool has_edge(int i, int j) const noexcept {
    if (i < 1 || j < 1 || i > n_ || j > n_) return false;
    return adjacency_[index(i, j)] != 0;
  }

  int degree(int v) const {
    int d = 0;
    for (int u = 1; u <= n_; ++u) d += has_edge(u, v) ? 1 : 0;
    return d;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u) {
      if (has_edge(u, v)) out.push_back(u);
    }
    return out;
  }

  bool has_isolated_vertex() const {
    for (int v = 1; v <= n_; ++v) {
      if (degree(v) == 0) return true;
    }
    return false;
  }

  friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
};

// ---------------------------------------------------------------------------
// Canonical families, all in their natural ordering.

inline OrderedGraph path_graph(int n) {
  if (n < 1) throw GraphError("path needs a positive vertex count");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return OrderedGraph(n, std::move(edges));
}

// Monotone path plus the wrap edge 1-n.
inline OrderedGraph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return OrderedGraph(n, std::move(edges));
}

inline OrderedGraph clique_graph(int n) {
  if (n < 1) throw GraphError("clique needs a positive vertex count");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  }
  return OrderedGraph(n, std::move(edges));
}

// 1..m joined to m+1..m+n.
inline OrderedGraph biclique_graph(int m, int n) {
  if (m < 1 || n < 1) throw GraphError("biclique needs positive side sizes");
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) {
    for (int j = m + 1; j <= m + n; ++j) edges.push_back({i, j});
  }
  return OrderedGraph(m + n, std::move(edges));
}

// Center at position a+1 with a leaves to its left and b to its right.
// One side may be empty (S_{0,b}, S_{a,0}); both empty is rejected.
inline OrderedGraph star_graph(int a, int b) {
  if (a < 0 || b < 0 || a + b == 0) throw GraphError("star needs non-negative sides, not both zero");
  const int center = a + 1;
  std::vector<Edge> edges;
  for (int v = 1; v <= a + b + 1; ++v) {
    if (v != center) edges.push_back({std::min(v, center), std::max(v, center)});
  }
  return OrderedGraph(a + b + 1, std::move(edges));
}

// The ordered cycle pattern v1v2, v1v3, v3v4, ..., v(k-1)vk, v2vk. This is
// the red structure the cycle-vs-biclique builder forces; for k = 3 it is
// the natural triangle.
inline OrderedGraph cycle_star_pattern(int k) {
  if (k < 3) throw GraphError("cycle pattern needs k >= 3");
  std::vector<Edge> edges{{1, 2}, {1, 3}};
  for (int i = 3; i < k; ++i) edges.push_back({i, i + 1});
  edges.push_back({2, k});
  return OrderedGraph(k, std::move(edges));
}

// ---------------------------------------------------------------------------
// Graph spec strings:
//   path:<n> | cycle:<n> | clique:<n> | biclique:<m>,<n> | star:<a>,<b> |
//   custom:<n>:<i>-<j>[,<i>-<j>...]
// ASCII, no whitespace, 1-based vertices. "custom:<n>:" with an empty edge
// list denotes the edgeless graph.

namespace detail {

class SpecCursor {
 public:
  explicit SpecCursor(std::string_view text) : text_(text) {}

  std::size_t pos() const noexcept { return pos_; }
  bool at_end() const noexcept { return pos_ == text_.size(); }

  int number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == start) throw ParseError("expected a number", start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) throw ParseError("number out of range", start);
    return value;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void finish() {
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Build>
OrderedGraph build_at(std::size_t pos, Build&& build) {
  try {
    return build();
  } catch (const GraphError& e) {
    throw ParseError(e.what(), pos);
  }
}

}  // namespace detail

inline OrderedGraph parse_graph_spec(std::string_view text) {
  detail::SpecCursor in(text);
  const std::string_view family = in.word();
  in.expect(':');
  const std::size_t params_at = in.pos();
  if (family == "path" || family == "cycle" || family == "clique") {
    const int n = in.number();
    in.finish();
    if (n < 1) throw ParseError("parameter must be positive", params_at);
    return detail::build_at(params_at, [&] {
      if (family == "path") return path_graph(n);
      if (family == "cycle") return cycle_graph(n);
      return clique_graph(n);
    });
  }
  if (family == "biclique" || family == "star") {
    const int a = in.number();
    in.expect(',');
    const int b = in.number();
    in.finish();
    return detail::build_at(params_at, [&] {
      return family == "biclique" ? biclique_graph(a, b) : star_graph(a, b);
    });
  }
  if (family == "custom") {
    const int n = in.number();
    if (n < 1) throw ParseError("parameter must be positive", params_at);
    in.expect(':');
    std::vector<Edge> edges;
    if (!in.at_end()) {
      do {
        const std::size_t edge_at = in.pos();
        const int i = in.number();
        in.expect('-');
        const int j = in.number();
        if (i == j) throw ParseError("loop at vertex " + std::to_string(i), edge_at);
        if (i < 1 || j < 1 || i > n || j > n) throw ParseError("endpoint out of range", edge_at);
        edges.push_back({i, j});
      } while (in.accept(','));
    }
    in.finish();
    return OrderedGraph(n, std::move(edges));
  }
  throw ParseError("unknown graph family '" + std::string(family) + "'", 0);
}

// Canonical custom: spec reproducing g exactly.
inline std::string to_spec(const OrderedGraph& g) {
  std::string out = "custom:" + std::to_string(g.vertex_count()) + ":";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ',';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Statistics.

struct DegreeProfile {
  std::vector<int> left_degrees;   // d-(v) for v = 1..n, stored at v-1
  std::vector<int> right_degrees;  // d+(v)
  int max_left = 0;
  int max_right = 0;
};

inline DegreeProfile degree_profile(const OrderedGraph& g) {
  DegreeProfile p;
  p.left_degrees.assign(g.vertex_count(), 0);
  p.right_degrees.assign(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++p.right_degrees[e.u - 1];
    ++p.left_degrees[e.v - 1];
  }
  for (int d : p.left_degrees) p.max_left = std::max(p.max_left, d);
  for (int d : p.right_degrees) p.max_right = std::max(p.max_right, d);
  return p;
}

inline int max_degree(const OrderedGraph& g) {
  int best = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

// Least number of consecutive independent intervals covering 1..n.
//
// Greedy: keep extending the current interval until the next vertex has a
// neighbour inside it. Exchange argument: any optimal partition can be
// rewritten so its first interval is the greedy one, because shrinking the
// second interval from the left keeps it independent; induct on the rest.
inline int interval_chromatic_number(const OrderedGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  int intervals = 1;
  int start = 1;
  for (int v = 2; v <= n; ++v) {
    for (int u = start; u < v; ++u) {
      if (g.has_edge(u, v)) {
        ++intervals;
        start = v;
        break;
      }
    }
  }
  return intervals;
}

namespace detail {

// Branch on an uncovered edge: one of its endpoints must be in the cover.
inline void cover_search(const std::vector<Edge>& edges, std::vector<bool>& in_cover, int size, int& best) {
  if (size >= best) return;
  const Edge* uncovered = nullptr;
  for (const Edge& e : edges) {
    if (!in_cover[e.u] && !in_cover[e.v]) {
      uncovered = &e;
      break;
    }
  }
  if (uncovered == nullptr) {
    best = size;
    return;
  }
  for (int endpoint : {uncovered->u, uncovered->v}) {
    in_cover[endpoint] = true;
    cover_search(edges, in_cover, size + 1, best);
    in_cover[endpoint] = false;
  }
}

}  // namespace detail

// Exact vertex cover number; exponential in the answer.
inline int vertex_cover_number(const OrderedGraph& g) {
  std::vector<bool> in_cover(g.vertex_count() + 1, false);
  int best = g.vertex_count();
  detail::cover_search(g.edges(), in_cover, 0, best);
  return best;
}

struct CoverInequality {
  int edges = 0;
  int max_degree = 0;
  int cover_number = 0;
  bool holds = false;  // edges <= max_degree * cover_number
};

inline CoverInequality cover_inequality_check(const OrderedGraph& g) {
  CoverInequality r;
  r.edges = g.edge_count();
  r.max_degree = max_degree(g);
  r.cover_number = vertex_cover_number(g);
  r.holds = r.edges <= r.max_degree * r.cover_number;
  return r;
}

// ---------------------------------------------------------------------------
// Transformations.

// i -> n+1-i.
inline OrderedGraph reverse(const OrderedGraph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.push_back({n + 1 - e.v, n + 1 - e.u});
  return OrderedGraph(n, std::move(edges));
}

// Deletes vertex v and shifts later vertices down by one.
inline OrderedGraph remove_vertex(const OrderedGraph& g, int v) {
  if (v < 1 || v > g.vertex_count()) throw GraphError("vertex out of range");
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) edges.push_back({shift(e.u), shift(e.v)});
  }
  return OrderedGraph(g.vertex_count() - 1, std::move(edges));
}

// Induced subgraph on the given vertices (listed in increasing order).
inline OrderedGraph induced_subgraph(const OrderedGraph& g, const std::vector<int>& vertices) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (g.has_edge(vertices[a], vertices[b])) edges.push_back({static_cast<int>(a) + 1, static_cast<int>(b) + 1});
    }
  }
  return OrderedGraph(static_cast<int>(vertices.size()), std::move(edges));
}

inline bool is_connected(const OrderedGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

inline bool is_tree(const OrderedGraph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

// Vertices of degree one, increasing.
inline std::vector<int> leaves(const OrderedGraph& g) {
  std::vector<int> out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

}  // namespace oramsey
