#include "oramsey/bounds.hpp"
#include "oramsey/verify.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

namespace oramsey {
namespace {

TEST(DegreeLower, Examples) {
  const BoundReport s3 = thm_degree_lower(star_graph(3, 3), star_graph(3, 3));
  EXPECT_EQ(s3.value, Rational(3, 2));
  EXPECT_EQ(s3.integer_view, 2);
  EXPECT_EQ(s3.kind, BoundKind::lower);
  EXPECT_FALSE(s3.cite.empty());
  EXPECT_EQ(thm_degree_lower(path_graph(3), path_graph(3)).value, Rational(0));
  EXPECT_EQ(thm_degree_lower(path_graph(3), path_graph(3)).integer_view, 0);
  EXPECT_EQ(thm_degree_lower(star_graph(5, 5), star_graph(5, 5)).value, Rational(5));
  EXPECT_EQ(thm_degree_lower(star_graph(5, 5), star_graph(5, 5)).integer_view, 5);
  // The smaller side decides: Delta-(K_{3,3}) = 3, Delta+(P_2) = 1.
  EXPECT_EQ(thm_degree_lower(biclique_graph(3, 3), path_graph(2)).value, Rational(0));
}

TEST(DegreeLower, ReversingAndSwappingBothInputsLeavesItUnchanged) {
  std::vector<OrderedGraph> gs;
  for (int n = 1; n <= 4; ++n) {
    for (auto& g : oracle::all_graphs(n)) gs.push_back(g);
  }
  for (std::size_t i = 0; i < gs.size(); i += 3) {
    for (std::size_t j = 0; j < gs.size(); j += 5) {
      EXPECT_EQ(thm_degree_lower(gs[i], gs[j]).value, thm_degree_lower(reverse(gs[j]), reverse(gs[i])).value);
    }
  }
}

TEST(CycleBicliqueUpper, Examples) {
  EXPECT_EQ(thm_cycle_biclique_upper(4, 2).integer_view, 26);
  EXPECT_EQ(thm_cycle_biclique_upper(3, 1).integer_view, 3);
  EXPECT_EQ(thm_cycle_biclique_upper(3, 2).integer_view, 20);
  EXPECT_EQ(thm_cycle_biclique_upper(5, 2).value, Rational(32));
  EXPECT_THROW(thm_cycle_biclique_upper(2, 2), Error);
  EXPECT_THROW(thm_cycle_biclique_upper(3, 0), Error);
}

TEST(LeafRecurrence, Examples) {
  EXPECT_EQ(leaf_recurrence_upper(path_graph(3), 3).integer_view, 12);
  EXPECT_EQ(leaf_recurrence_upper(path_graph(2), 3).integer_view, 3);
  EXPECT_EQ(leaf_recurrence_upper(path_graph(4), 2).integer_view, 7);
  EXPECT_THROW(leaf_recurrence_upper(OrderedGraph::edgeless(1), 3), Error);
  EXPECT_THROW(leaf_recurrence_upper(cycle_graph(3), 3), Error);
  EXPECT_THROW(leaf_recurrence_value(3, 1), Error);
}

TEST(LeafRecurrence, MatchesTheClosedForm) {
  for (int n = 2; n <= 6; ++n) {
    long long power = 1;
    for (int l = 2; l <= 8; ++l) {
      power *= n;  // n^(l-1)
      EXPECT_EQ(leaf_recurrence_value(l, n), choose2(n) * (power - 1) / (n - 1));
    }
  }
}

// B(T) over every order of leaf removal, as a set of values.
void all_elimination_values(const OrderedGraph& t, int n, std::set<long long>& out) {
  if (t.vertex_count() == 2) {
    out.insert(choose2(n));
    return;
  }
  for (int leaf : leaves(t)) {
    std::set<long long> sub;
    all_elimination_values(remove_vertex(t, leaf), n, sub);
    for (long long b : sub) out.insert(choose2(n) + n * b);
  }
}

TEST(LeafRecurrence, IndependentOfTheLeafEliminationOrder) {
  int trees = 0;
  for (int l = 2; l <= 5; ++l) {
    for (const OrderedGraph& g : oracle::all_graphs(l)) {
      if (!is_tree(g)) continue;
      ++trees;
      for (int n = 2; n <= 4; ++n) {
        std::set<long long> values;
        all_elimination_values(g, n, values);
        ASSERT_EQ(values, (std::set<long long>{leaf_recurrence_upper(g, n).integer_view})) << to_spec(g);
      }
    }
  }
  EXPECT_EQ(trees, 1 + 3 + 16 + 125);  // l^(l-2) labelled trees
}

TEST(ErdosSzekeres, FormulaAndCrossCheck) {
  EXPECT_EQ(erdos_szekeres(3, 3).integer_view, 5);
  EXPECT_EQ(erdos_szekeres(3, 4).integer_view, 7);
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(erdos_szekeres(2, m).integer_view, m);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const auto r = erdos_szekeres(a, b).integer_view;
      if (r > 7) continue;
      EXPECT_EQ(ordered_ramsey_number(path_graph(a), path_graph(b), 8).value, r) << a << "," << b;
    }
  }
}

TEST(SymStarReference, Examples) {
  const SymStarReference two = sym_star_reference(2);
  EXPECT_EQ(two.upper.integer_view, 3160);
  EXPECT_EQ(two.quadratic, 4608);
  EXPECT_TRUE(two.upper_within_quadratic);
  EXPECT_EQ(two.lower_ordered.integer_view, 4);
  EXPECT_EQ(two.lower_ordered.quantity, "r_<");
  const SymStarReference three = sym_star_reference(3);
  EXPECT_EQ(three.upper.integer_view, 6216);
  EXPECT_EQ(three.quadratic, 10368);
  EXPECT_TRUE(three.upper_within_quadratic);
  for (int n = 2; n <= 200; ++n) EXPECT_TRUE(sym_star_reference(n).upper_within_quadratic);
  EXPECT_THROW(sym_star_reference(1), Error);
}

TEST(CheckedArithmetic, OverflowIsReported) {
  EXPECT_THROW(leaf_recurrence_value(80, 9), Error);
  EXPECT_THROW(thm_cycle_biclique_upper(3, 3'000'000), Error);
}

TEST(ApplicableBounds, SelectsByFamily) {
  auto names = [](const std::vector<BoundReport>& rs) {
    std::vector<std::string> out;
    for (const auto& r : rs) out.push_back(r.name);
    return out;
  };
  EXPECT_EQ(names(applicable_bounds(cycle_graph(3), biclique_graph(2, 2))),
            (std::vector<std::string>{"degree_lower", "cycle_biclique_upper"}));
  EXPECT_EQ(names(applicable_bounds(path_graph(3), clique_graph(3))),
            (std::vector<std::string>{"degree_lower", "leaf_recurrence_upper"}));
  EXPECT_EQ(names(applicable_bounds(path_graph(3), path_graph(2))),
            (std::vector<std::string>{"degree_lower", "leaf_recurrence_upper", "erdos_szekeres"}));
  EXPECT_EQ(names(applicable_bounds(cycle_graph(5), cycle_graph(5))), (std::vector<std::string>{"degree_lower"}));
}

TEST(VerifyBounds, Examples) {
  const auto a = verify_bounds(path_graph(2), clique_graph(3), 4);
  EXPECT_TRUE(a.all_hold);
  EXPECT_EQ(a.solve.value, 3);
  bool leaf_checked = false;
  for (const auto& c : a.comparisons) {
    if (c.name == "leaf_recurrence_upper") {
      EXPECT_TRUE(c.applicable);
      EXPECT_EQ(c.bound, 3);
      leaf_checked = true;
    }
    if (c.name == "degree_lower") { EXPECT_EQ(c.bound, 0); }
  }
  EXPECT_TRUE(leaf_checked);

  const auto b = verify_bounds(path_graph(3), clique_graph(3), 7);
  EXPECT_TRUE(b.all_hold);
  EXPECT_NE(b.solve.value, kNoForcedWin);
  EXPECT_LE(b.solve.value, 12);

  const auto c = verify_bounds(path_graph(2), path_graph(2), 2);
  EXPECT_TRUE(c.all_hold);
  EXPECT_EQ(c.solve.value, 1);
}

TEST(VerifyBounds, HoldsOnEverySmallInstance) {
  std::vector<OrderedGraph> gs;
  for (int n = 2; n <= 3; ++n) {
    for (auto& g : oracle::all_graphs(n)) {
      if (g.edge_count() > 0) gs.push_back(g);
    }
  }
  for (const auto& g1 : gs) {
    for (const auto& g2 : gs) {
      for (int n = 3; n <= 5; ++n) {
        const auto v = verify_bounds(g1, g2, n);
        ASSERT_TRUE(v.all_hold) << to_spec(g1) << " " << to_spec(g2) << " N=" << n;
      }
    }
  }
}

TEST(VerifyBounds, BudgetExhaustionIsAnError) {
  SolverOptions tight;
  tight.node_budget = 2;
  EXPECT_THROW(verify_bounds(path_graph(3), path_graph(3), 6, tight), BudgetExceeded);
}

}  // namespace
}  // namespace oramsey
