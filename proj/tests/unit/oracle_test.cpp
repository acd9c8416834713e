#include "brute.hpp"
#include "turanforge/generators.hpp"
#include "turanforge/oracle.hpp"
#include "turanforge/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace turanforge {
namespace {

BipartiteGraph complete(std::size_t m, std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < m; ++a) {
    for (Vertex b = 0; b < n; ++b) edges.emplace_back(a, b);
  }
  return BipartiteGraph(m, n, edges);
}

TEST(MaxKst, Examples) {
  EXPECT_EQ(max_kst(complete(5, 5), 3).t, 5u);
  // C_6 as a bipartite graph with parts of 3: a_i ~ b_i, b_{i+1}.
  const BipartiteGraph c6(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
  EXPECT_EQ(max_kst(c6, 2).t, 1u);
  EXPECT_EQ(max_kst(BipartiteGraph(3, 3), 1).t, 0u);
  EXPECT_THROW(max_kst(c6, 4), PreconditionError);
}

TEST(MaxKst, LexFirstMaximizer) {
  const BipartiteGraph f(3, 2, {{1, 0}, {1, 1}, {2, 0}, {2, 1}});
  EXPECT_EQ(max_kst(f, 1).s, (VertexSet{1}));
}

TEST(MaxKst, InvariantUnderRelabeling) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t m = 4 + seed % 6;
    const std::size_t n = 3 + seed % 8;
    const BipartiteGraph f = BipartiteGraph::random(m, n, m * n / 2, seed);
    std::vector<Vertex> pa(m), pb(n);
    std::iota(pa.begin(), pa.end(), Vertex{0});
    std::iota(pb.begin(), pb.end(), Vertex{0});
    std::shuffle(pa.begin(), pa.end(), rng);
    std::shuffle(pb.begin(), pb.end(), rng);
    std::vector<Edge> moved;
    for (Vertex a = 0; a < m; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        if (f.adjacent(a, b)) moved.emplace_back(pa[a], pb[b]);
      }
    }
    const BipartiteGraph g(m, n, moved);
    for (std::size_t s = 1; s <= 3; ++s) {
      EXPECT_EQ(max_kst(f, s).t, max_kst(g, s).t);
      EXPECT_EQ(max_kst(f, s).t, brute::max_kst(f, s));
    }
  }
}

TEST(Verify, AcceptsGeneratorWitness) {
  const Graph g = complete_multipartite({{2, 2, 3}, true});
  const KrPlusWitness w{{{0, 1}, {2, 3}, {4, 5, 6}}, {0, 1}};
  EXPECT_TRUE(verify_krplus(g, w));
}

TEST(Verify, ReportsFirstViolatedClause) {
  const Graph g = complete_multipartite({{2, 2, 3}, true});
  const KrPlusWitness w{{{0, 1}, {2, 3}, {4, 5, 6}}, {0, 1}};
  const VerifyResult missing = verify_krplus(g.without_edge(2, 5), w);
  EXPECT_FALSE(missing);
  EXPECT_NE(missing.diagnostic.find("missing cross edge"), std::string::npos);

  const KrPlusWitness small{{{0}, {2, 3}}, {0, 0}};
  EXPECT_EQ(verify_krplus(g, small).diagnostic, "first part too small");

  EXPECT_NE(verify_krplus(g, KrPlusWitness{{}, {0, 1}}).diagnostic.find("no parts"), std::string::npos);
  EXPECT_NE(verify_krplus(g, KrPlusWitness{{{0, 1}, {}}, {0, 1}}).diagnostic.find("empty"), std::string::npos);
  EXPECT_NE(verify_krplus(g, KrPlusWitness{{{0, 1}, {9}}, {0, 1}}).diagnostic.find("range"), std::string::npos);
  EXPECT_NE(verify_krplus(g, KrPlusWitness{{{0, 1}, {1, 2}}, {0, 1}}).diagnostic.find("disjoint"), std::string::npos);
  EXPECT_NE(verify_krplus(g, KrPlusWitness{{{0, 1}, {2, 3}}, {0, 2}}).diagnostic.find("inside first part"), std::string::npos);
  EXPECT_NE(verify_krplus(g.without_edge(0, 1), w).diagnostic.find("extra edge missing"), std::string::npos);
}

TEST(FindKrPlus, Examples) {
  const PartSpec k22plus{{2, 2}, true};
  const KrPlusSearch found = find_krplus_exact(complete_multipartite(k22plus), k22plus);
  ASSERT_EQ(found.status, SearchStatus::kFound);
  EXPECT_TRUE(verify_krplus(complete_multipartite(k22plus), *found.witness));

  EXPECT_EQ(find_krplus_exact(complete_multipartite({{3, 3}}), k22plus).status, SearchStatus::kNone);

  const Graph t10 = turan_plus_edge(2, 10);
  const KrPlusSearch book = find_krplus_exact(t10, {{2, 4}, true});
  ASSERT_EQ(book.status, SearchStatus::kFound);
  EXPECT_EQ(book.witness->part_sizes(), (std::vector<std::size_t>{2, 4}));
  EXPECT_TRUE(verify_krplus(t10, *book.witness));
}

TEST(FindKrPlus, BudgetExhaustionIsIndeterminate) {
  const Graph g = random_graph_with_edges(14, 60, 3);
  const KrPlusSearch res = find_krplus_exact(g, {{3, 3, 3}, true}, 5);
  EXPECT_EQ(res.status, SearchStatus::kIndeterminate);
  EXPECT_FALSE(res.witness);
  EXPECT_STREQ(to_string(res.status), "indeterminate");
}

TEST(FindKrPlus, BudgetFromEnvironment) {
  ::setenv("TURANFORGE_BUDGET", "1234", 1);
  EXPECT_EQ(default_node_budget(), 1234u);
  ::setenv("TURANFORGE_BUDGET", "junk", 1);
  EXPECT_EQ(default_node_budget(), 10'000'000u);
  ::unsetenv("TURANFORGE_BUDGET");
  EXPECT_EQ(default_node_budget(), 10'000'000u);
}

TEST(FindKrPlus, ReturnsPartsInSpecOrder) {
  const Graph g = complete_multipartite({{2, 1, 3}, true});
  const KrPlusSearch res = find_krplus_exact(g, {{2, 1, 3}, true});
  ASSERT_EQ(res.status, SearchStatus::kFound);
  EXPECT_EQ(res.witness->part_sizes(), (std::vector<std::size_t>{2, 1, 3}));
  EXPECT_TRUE(verify_krplus(g, *res.witness));
}

TEST(FindKrPlus, WithoutExtraEdge) {
  const Graph g = complete_multipartite({{3, 3}});
  const KrPlusSearch res = find_krplus_exact(g, {{3, 3}, false});
  EXPECT_EQ(res.status, SearchStatus::kFound);
  EXPECT_EQ(find_krplus_exact(g, {{3, 4}, false}).status, SearchStatus::kNone);
}

TEST(FindKrPlus, AgreesWithSubgraphIsomorphism) {
  const std::vector<PartSpec> specs = {
      {{2, 1}, true}, {{2, 2}, true}, {{2, 3}, true}, {{3, 2}, true}, {{2, 1, 1}, true},
      {{2, 2, 1}, true}, {{2, 1, 2}, true}, {{3, 1, 1}, true}, {{2, 2, 2}, true}, {{2, 2}, false},
      {{1, 2, 2}, false}};
  int found = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 6 + seed % 5;
    const Graph g = random_graph_with_edges(n, n * (n - 1) / 2 * (5 + seed % 4) / 10, seed);
    for (const PartSpec& spec : specs) {
      if (spec.order() > n) continue;
      const KrPlusSearch res = find_krplus_exact(g, spec);
      ASSERT_NE(res.status, SearchStatus::kIndeterminate);
      const bool expected = brute::contains_subgraph(g, complete_multipartite(spec));
      EXPECT_EQ(res.status == SearchStatus::kFound, expected) << "seed " << seed;
      if (res.witness && spec.plus_edge) {
        EXPECT_TRUE(verify_krplus(g, *res.witness));
        EXPECT_EQ(res.witness->part_sizes(), spec.sizes);
      }
      found += expected ? 1 : 0;
    }
  }
  EXPECT_GT(found, 50);
}

TEST(MaxBalanced, Examples) {
  const MaxBalanced k5 = max_balanced_krplus(complete_multipartite({{1, 1, 1, 1, 1}}), 2);
  EXPECT_EQ(k5.s, 2u);
  EXPECT_TRUE(k5.base_shape_found);
  const MaxBalanced t8 = max_balanced_krplus(turan_graph(2, 8), 2);
  EXPECT_EQ(t8.s, 0u);
  EXPECT_FALSE(t8.base_shape_found);
}

TEST(MaxBalanced, StableUnderRelabeling) {
  const Graph g = random_graph_with_edges(12, 45, 11);
  const MaxBalanced base = max_balanced_krplus(g, 3);
  ASSERT_EQ(base.status, SearchStatus::kFound);
  Rng rng(11);
  for (int k = 0; k < 3; ++k) {
    std::vector<Vertex> perm(12);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const MaxBalanced other = max_balanced_krplus(permuted(g, perm), 3);
    EXPECT_EQ(other.s, base.s);
    EXPECT_EQ(other.base_shape_found, base.base_shape_found);
  }
}

TEST(Frontier, BookSizes) {
  const Graph t10 = turan_plus_edge(2, 10);
  EXPECT_EQ(krplus_frontier(t10, 2, 2, 2).t, 5u);
  EXPECT_EQ(krplus_frontier(turan_graph(2, 8), 2, 2, 2).t, 0u);
}

TEST(RPartite, Examples) {
  const Graph k33 = complete_multipartite({{3, 3}});
  const auto two = is_r_partite(k33, 2);
  ASSERT_TRUE(two);
  EXPECT_TRUE(is_proper_coloring(k33, *two, 2));
  EXPECT_NE((*two)[0], (*two)[3]);
  const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_FALSE(is_r_partite(c5, 2));
  EXPECT_FALSE(is_r_partite(complete_multipartite({{1, 1, 1, 1}}), 3));
  EXPECT_TRUE(is_r_partite(Graph(0, {}), 1));
}

TEST(RPartite, AgreesWithExhaustiveColoring) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const std::uint64_t pairs = n * (n - 1) / 2;
    const Graph g = random_graph_with_edges(n, pairs * (seed % 10) / 10, seed);
    for (std::size_t r = 1; r <= 4; ++r) {
      const auto coloring = is_r_partite(g, r);
      EXPECT_EQ(coloring.has_value(), brute::colorable(g, r)) << "seed " << seed << " r " << r;
      if (coloring) EXPECT_TRUE(is_proper_coloring(g, *coloring, r));
    }
  }
}

TEST(ProperColoring, RejectsBadInput) {
  const Graph g(2, {{0, 1}});
  EXPECT_FALSE(is_proper_coloring(g, {0, 0}, 2));
  EXPECT_FALSE(is_proper_coloring(g, {0, 2}, 2));
  EXPECT_FALSE(is_proper_coloring(g, {0}, 2));
  EXPECT_TRUE(is_proper_coloring(g, {1, 0}, 2));
}

}  // namespace
}  // namespace turanforge
