#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "oramsey/error.hpp"
#include "oramsey/ordered_graph.hpp"

namespace oramsey {

using Rational = boost::rational<long long>;

enum class BoundKind : std::uint8_t { lower, upper, exact };

struct BoundReport {
  std::string name;
  BoundKind kind = BoundKind::upper;
  std::string quantity;       // "r_o" or "r_<"
  Rational value{0};
  long long integer_view = 0;  // ceiling for lower bounds, the value itself otherwise
  std::string cite;           // which argument the formula comes from
  std::string assumptions;
};

inline const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::lower:
      return "lower";
    case BoundKind::upper:
      return "upper";
    case BoundKind::exact:
      return "exact";
  }
  return "?";
}

namespace detail {

inline long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("bound overflows 64-bit arithmetic");
  return out;
}

inline long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error("bound overflows 64-bit arithmetic");
  return out;
}

inline long long ceil_of(const Rational& r) {
  const long long q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() > 0) ? q + 1 : q;
}

}  // namespace detail

inline long long choose2(long long n) { return n < 2 ? 0 : detail::checked_mul(n, n - 1) / 2; }

// (1/4) min{d-(G1)(d-(G1)-1), d+(G2)(d+(G2)-1)}; the degree-threshold
// painter survives this many turns against any builder.
inline BoundReport thm_degree_lower(const OrderedGraph& g1, const OrderedGraph& g2) {
  const long long left = degree_profile(g1).max_left;
  const long long right = degree_profile(g2).max_right;
  const long long m = std::min(left * (left - 1), right * (right - 1));
  BoundReport r;
  r.name = "degree_lower";
  r.kind = BoundKind::lower;
  r.quantity = "r_o";
  r.value = Rational(m, 4);
  r.integer_view = detail::ceil_of(r.value);
  r.cite = "degree-threshold painter: blue iff d+(i) < d-(j)";
  r.assumptions = "any ordered G1, G2; Delta-(G1)=" + std::to_string(left) + ", Delta+(G2)=" + std::to_string(right);
  return r;
}

// 2n^3 + (k-3) n (2n-1) + n^2.
inline BoundReport thm_cycle_biclique_upper(int k, int n) {
  if (k < 3) throw Error("cycle length must be at least 3");
  if (n < 1) throw Error("biclique side must be positive");
  const long long nn = n;
  using detail::checked_add;
  using detail::checked_mul;
  const long long cube = checked_mul(2 * nn, checked_mul(nn, nn));
  const long long v =
      checked_add(checked_add(cube, checked_mul(k - 3, checked_mul(nn, 2 * nn - 1))), checked_mul(nn, nn));
  BoundReport r;
  r.name = "cycle_biclique_upper";
  r.kind = BoundKind::upper;
  r.quantity = "r_o";
  r.value = Rational(v);
  r.integer_view = v;
  r.cite = "cycle-vs-biclique builder: K_{n,2n^2}, then k-3 bridging blocks, then K_{n,n}";
  r.assumptions = "k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                  "; the construction forces the ordered pattern v1v2, v1v3, v3v4, ..., v2vk";
  return r;
}

// Unrolled leaf recurrence B(2) = C(n,2), B(l) = C(n,2) + n B(l-1).
inline long long leaf_recurrence_value(int vertices, int n) {
  if (vertices < 2) throw Error("leaf recurrence needs at least 2 vertices");
  if (n < 2) throw Error("clique size must be at least 2");
  const long long base = choose2(n);
  long long b = base;
  for (int l = 3; l <= vertices; ++l) b = detail::checked_add(base, detail::checked_mul(n, b));
  return b;
}

inline BoundReport leaf_recurrence_upper(const OrderedGraph& tree, int n) {
  if (tree.vertex_count() < 2) throw Error("tree needs at least 2 vertices");
  if (!is_tree(tree)) throw Error("graph is not a tree");
  const long long v = leaf_recurrence_value(tree.vertex_count(), n);
  BoundReport r;
  r.name = "leaf_recurrence_upper";
  r.kind = BoundKind::upper;
  r.quantity = "r_o";
  r.value = Rational(v);
  r.integer_view = v;
  r.cite = "leaf recursion: n nested copies of T-v, then K_n on the copies of v's neighbour";
  r.assumptions = "tree with l=" + std::to_string(tree.vertex_count()) + " vertices vs K_" + std::to_string(n) +
                  "; closed form C(n,2)(n^(l-1)-1)/(n-1)";
  return r;
}

// r_<(P_n, P_m) = (n-1)(m-1)+1.
inline BoundReport erdos_szekeres(int n, int m) {
  if (n < 1 || m < 1) throw Error("path lengths must be positive");
  const long long v = detail::checked_add(detail::checked_mul(n - 1, m - 1), 1);
  BoundReport r;
  r.name = "erdos_szekeres";
  r.kind = BoundKind::exact;
  r.quantity = "r_<";
  r.value = Rational(v);
  r.integer_view = v;
  r.cite = "Erdos-Szekeres monotone path theorem";
  r.assumptions = "monotone paths P_" + std::to_string(n) + ", P_" + std::to_string(m);
  return r;
}

struct SymStarReference {
  BoundReport upper;            // on r_o(S_{n,n}, S_{n,n})
  bool upper_within_quadratic;  // C(16(2n+1), 2) <= 1152 n^2
  long long quadratic = 0;
  BoundReport lower_ordered;    // on r_<, not r_o
};

inline SymStarReference sym_star_reference(int n) {
  if (n < 2) throw Error("two-sided star reference needs n >= 2");
  SymStarReference s;
  const long long up = choose2(16LL * (2LL * n + 1));
  s.upper.name = "sym_star_upper";
  s.upper.kind = BoundKind::upper;
  s.upper.quantity = "r_o";
  s.upper.value = Rational(up);
  s.upper.integer_view = up;
  s.upper.cite = "r_o <= C(r_<, 2) with r_<(S_{n,n}, S_{n,n}) <= 16(2n+1)";
  s.upper.assumptions = "n=" + std::to_string(n);
  s.quadratic = 1152LL * n * n;
  s.upper_within_quadratic = up <= s.quadratic;
  s.lower_ordered.name = "sym_star_ordered_lower";
  s.lower_ordered.kind = BoundKind::lower;
  s.lower_ordered.quantity = "r_<";
  s.lower_ordered.value = Rational(8LL * n - 12);
  s.lower_ordered.integer_view = 8LL * n - 12;
  s.lower_ordered.cite = "r_<(S_{n,n}, S_{n,n}) > 8n-12 (a bound on the ordered Ramsey number only)";
  s.lower_ordered.assumptions = "n=" + std::to_string(n) + "; strict inequality";
  return s;
}

// Builder completes K_r on r = r_<(G1, G2) vertices.
inline BoundReport clique_upper(int ordered_ramsey) {
  BoundReport r;
  r.name = "clique_upper";
  r.kind = BoundKind::upper;
  r.quantity = "r_o";
  r.value = Rational(choose2(ordered_ramsey));
  r.integer_view = choose2(ordered_ramsey);
  r.cite = "Builder completes ordered K_{r_<}";
  r.assumptions = "r_<=" + std::to_string(ordered_ramsey);
  return r;
}

// ---------------------------------------------------------------------------
// Family recognition used to decide which closed forms apply.

inline std::optional<int> as_clique(const OrderedGraph& g) {
  if (g.vertex_count() >= 1 && g == clique_graph(g.vertex_count())) return g.vertex_count();
  return std::nullopt;
}

// Side n when g is the natural K_{n,n}.
inline std::optional<int> as_balanced_biclique(const OrderedGraph& g) {
  const int v = g.vertex_count();
  if (v >= 2 && v % 2 == 0 && g == biclique_graph(v / 2, v / 2)) return v / 2;
  return std::nullopt;
}

// k when g is the forced cycle pattern C*_k (natural C_3 for k = 3).
inline std::optional<int> as_cycle_pattern(const OrderedGraph& g) {
  if (g.vertex_count() >= 3 && g == cycle_star_pattern(g.vertex_count())) return g.vertex_count();
  return std::nullopt;
}

inline std::optional<int> as_natural_path(const OrderedGraph& g) {
  if (g.vertex_count() >= 1 && g == path_graph(g.vertex_count())) return g.vertex_count();
  return std::nullopt;
}

// Closed-form reports relevant to a target pair.
inline std::vector<BoundReport> applicable_bounds(const OrderedGraph& g1, const OrderedGraph& g2) {
  std::vector<BoundReport> out{thm_degree_lower(g1, g2)};
  if (auto k = as_cycle_pattern(g1)) {
    if (auto n = as_balanced_biclique(g2)) out.push_back(thm_cycle_biclique_upper(*k, *n));
  }
  if (auto n = as_clique(g2); n && *n >= 2 && g1.vertex_count() >= 2 && is_tree(g1)) {
    out.push_back(leaf_recurrence_upper(g1, *n));
  }
  if (auto a = as_natural_path(g1)) {
    if (auto b = as_natural_path(g2)) out.push_back(erdos_szekeres(*a, *b));
  }
  return out;
}

}  // namespace oramsey
