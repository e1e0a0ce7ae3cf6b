#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <span>
#include <vector>

#include "oramsey/ordered_graph.hpp"

namespace oramsey {

// Host vertices, 1-based, one per target vertex; strictly increasing.
using Embedding = std::vector<int>;

// Anything with 1-based vertices 1..vertex_count() and a symmetric has_edge.
template <class H>
concept HostGraph = requires(const H& h, int i, int j) {
  { h.vertex_count() } -> std::convertible_to<int>;
  { h.has_edge(i, j) } -> std::convertible_to<bool>;
};

// Forces target vertex `target` (1-based) onto host vertex `host`.
struct Pin {
  int target = 0;
  int host = 0;
};

// Order-preserving subgraph search of one target inside one host.
//
// Target vertices are assigned left to right. A candidate for target vertex t
// must leave enough host vertices on both sides for the rest of the target,
// respect any pins, carry at least t's left and right degree in the host, and
// be adjacent to the images of t's earlier neighbours. Host degrees are
// computed once at construction, so one search object can answer many pinned
// queries against the same host.
template <HostGraph Host>
class EmbeddingSearch {
 public:
  EmbeddingSearch(const OrderedGraph& target, const Host& host)
      : target_(target), host_(host), n_(target.vertex_count()), m_(host.vertex_count()) {
    const DegreeProfile tp = degree_profile(target);
    target_left_ = tp.left_degrees;
    target_right_ = tp.right_degrees;
    earlier_.resize(n_);
    for (const Edge& e : target.edges()) earlier_[e.v - 1].push_back(e.u - 1);
    host_left_.assign(m_ + 1, 0);
    host_right_.assign(m_ + 1, 0);
    if (target.edge_count() > 0) {
      for (int a = 1; a <= m_; ++a) {
        for (int b = a + 1; b <= m_; ++b) {
          if (host_.has_edge(a, b)) {
            ++host_right_[a];
            ++host_left_[b];
          }
        }
      }
    }
  }

  std::optional<Embedding> find(std::span<const Pin> pins = {}) const {
    if (n_ > m_) return std::nullopt;
    std::vector<int> pinned(n_, 0);
    for (const Pin& p : pins) {
      if (p.target < 1 || p.target > n_ || p.host < 1 || p.host > m_) return std::nullopt;
      if (pinned[p.target - 1] != 0 && pinned[p.target - 1] != p.host) return std::nullopt;
      pinned[p.target - 1] = p.host;
    }
    // Latest host vertex each target vertex may use, given later pins.
    std::vector<int> limit(n_, 0);
    int next_limit = m_ + 1;
    for (int t = n_ - 1; t >= 0; --t) {
      limit[t] = next_limit - 1;
      if (pinned[t] != 0) {
        if (pinned[t] > limit[t]) return std::nullopt;
        limit[t] = pinned[t];
      }
      next_limit = limit[t];
    }
    Embedding map(n_, 0);
    if (extend(0, pinned, limit, map)) return map;
    return std::nullopt;
  }

  // Embeddings that use host edge (a, b), a < b, as the image of some target edge.
  std::optional<Embedding> find_through(int a, int b) const {
    for (const Edge& e : target_.edges()) {
      const Pin pins[2] = {{e.u, a}, {e.v, b}};
      if (auto found = find(pins)) return found;
    }
    return std::nullopt;
  }

 private:
  bool extend(int t, const std::vector<int>& pinned, const std::vector<int>& limit, Embedding& map) const {
    if (t == n_) return true;
    const int lo = t == 0 ? 1 : map[t - 1] + 1;
    const int hi = limit[t];
    const int first = pinned[t] != 0 ? std::max(lo, pinned[t]) : lo;
    const int last = pinned[t] != 0 ? std::min(hi, pinned[t]) : hi;
    for (int c = first; c <= last; ++c) {
      if (host_left_[c] < target_left_[t] || host_right_[c] < target_right_[t]) continue;
      bool ok = true;
      for (int s : earlier_[t]) {
        if (!host_.has_edge(map[s], c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[t] = c;
      if (extend(t + 1, pinned, limit, map)) return true;
    }
    return false;
  }

  OrderedGraph target_;
  const Host& host_;
  int n_;
  int m_;
  std::vector<int> target_left_;
  std::vector<int> target_right_;
  std::vector<std::vector<int>> earlier_;
  std::vector<int> host_left_;
  std::vector<int> host_right_;
};

template <HostGraph Host>
std::optional<Embedding> contains(const OrderedGraph& target, const Host& host) {
  return EmbeddingSearch<Host>(target, host).find();
}

}  // namespace oramsey
