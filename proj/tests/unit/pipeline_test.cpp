#include "brute.hpp"
#include "turanforge/generators.hpp"
#include "turanforge/inverted.hpp"
#include "turanforge/oracle.hpp"
#include "turanforge/stability.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace turanforge {
namespace {

const Rational kTinyAlpha(BigInt(1), BigInt(4096));

TEST(Dichotomy, T2Of10PlusEdge) {
  const DichotomyOutcome d = dichotomy_subgraph(turan_plus_edge(2, 10), 2);
  ASSERT_TRUE(d.certified());
  EXPECT_EQ(*d.branch, Branch::kMindeg);
  EXPECT_EQ(d.sub.graph.order(), 10u);
  EXPECT_EQ(d.min_degree, 5u);
  ASSERT_TRUE(d.clique);
  EXPECT_TRUE(d.deleted.empty());
}

TEST(Dichotomy, CompleteGraphChecksMindegFirst) {
  const DichotomyOutcome d = dichotomy_subgraph(complete_multipartite({std::vector<std::size_t>(10, 1)}), 2);
  ASSERT_TRUE(d.certified());
  EXPECT_EQ(*d.branch, Branch::kMindeg);
  EXPECT_EQ(d.min_degree, 9u);
  EXPECT_TRUE(d.dense_holds);
}

TEST(Dichotomy, RequiresMoreThanTuranEdges) {
  EXPECT_THROW(dichotomy_subgraph(turan_graph(2, 10), 2), PreconditionError);
}

TEST(Dichotomy, DenseBranchOnUnevenTuran) {
  const DichotomyOutcome d = dichotomy_subgraph(turan_plus_edge(3, 10), 3);
  ASSERT_TRUE(d.certified());
  EXPECT_EQ(*d.branch, Branch::kDense);
  EXPECT_TRUE(dense_condition(d.sub.graph, 3));
}

TEST(Dichotomy, DeletesLowDegreeVertices) {
  const DichotomyOutcome d = dichotomy_subgraph(turan_plus_edge(2, 7), 2);
  ASSERT_TRUE(d.certified());
  EXPECT_EQ(*d.branch, Branch::kMindeg);
  EXPECT_EQ(d.deleted, (std::vector<Vertex>{2}));
  EXPECT_EQ(d.sub.graph.order(), 6u);
  EXPECT_TRUE(mindeg_condition(d.sub.graph, 2));
}

TEST(Dichotomy, ConditionsAreExact) {
  // T_2(7)+edge: 13 edges, and (1/4 + 1/48) 49 = 13.27.
  EXPECT_FALSE(dense_condition(turan_plus_edge(2, 7), 2));
  EXPECT_TRUE(dense_condition(complete_multipartite({{1, 1, 1, 1}}), 2));
  EXPECT_FALSE(mindeg_condition(turan_plus_edge(2, 7), 2));
}

TEST(Inverted, BookInT2Of8) {
  const Graph g = turan_plus_edge(2, 8);
  const InvertedResult res = turan_inverted(g, 2, 2 / std::log(8.0));
  ASSERT_TRUE(res) << res.failure;
  EXPECT_EQ(res.s_target, 2u);
  EXPECT_EQ(res.witness->parts[0], (VertexSet{0, 1}));
  EXPECT_EQ(res.witness->parts[1], (VertexSet{4, 5, 6, 7}));
  EXPECT_EQ(res.witness->extra_edge, (Edge{0, 1}));
  EXPECT_TRUE(verify_krplus(g, *res.witness));
}

TEST(Inverted, T3Of9AgreesWithOracle) {
  const Graph g = turan_plus_edge(3, 9);
  const InvertedResult res = turan_inverted(g, 3, 1 / std::log(9.0));
  ASSERT_TRUE(res) << res.failure;
  EXPECT_EQ(res.s_target, 1u);
  EXPECT_TRUE(verify_krplus(g, *res.witness));
  EXPECT_EQ(find_krplus_exact(g, {{2, 1, 1}, true}).status, SearchStatus::kFound);
  EXPECT_EQ(find_krplus_exact(g, {res.witness->part_sizes(), true}).status, SearchStatus::kFound);
}

TEST(Inverted, TuranGraphItselfIsRejected) {
  try {
    turan_inverted(turan_graph(3, 9), 3, 1.0);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("<= t_r(n)"), std::string::npos);
  }
}

TEST(Inverted, DenseBranchWitness) {
  const Graph g = turan_plus_edge(3, 10);
  ExtractOptions opts;
  opts.target_s = 2;
  const InvertedResult res = turan_inverted(g, 3, 1.0, opts);
  ASSERT_TRUE(res) << res.failure;
  EXPECT_EQ(*res.branch, Branch::kDense);
  ASSERT_TRUE(res.covered);
  EXPECT_EQ(res.covered->size(), 4u);
  EXPECT_EQ(res.witness->parts[0].size(), 2u);
  EXPECT_GE(res.witness->parts[1].size(), 2u);
  EXPECT_GE(res.witness->last_part_size(), 2u);
  EXPECT_TRUE(verify_krplus(g, *res.witness));
}

TEST(Inverted, ReportsTheoremTargets) {
  const Graph g = turan_plus_edge(2, 30);
  ExtractOptions opts;
  opts.target_s = 2;
  const InvertedResult res = turan_inverted(g, 2, 0.0, opts);
  ASSERT_TRUE(res);
  EXPECT_NEAR(res.theorem.c, 2 / std::log(30.0), 1e-12);
  EXPECT_EQ(res.theorem.s, 2u);
  EXPECT_EQ(res.theorem.t, static_cast<std::size_t>(std::ceil(std::pow(30.0, 1 - std::sqrt(res.theorem.c)))));
  EXPECT_FALSE(res.theorem.in_regime);
}

TEST(Inverted, FixedConstantFormNeedsHugeN) {
  EXPECT_THROW(turan_inverted_fixed(turan_plus_edge(2, 10), 2), PreconditionError);
}

TEST(Inverted, SmallCIsRejected) {
  EXPECT_THROW(turan_inverted(turan_plus_edge(2, 10), 2, 0.1), PreconditionError);
}

TEST(Inverted, RandomNearExtremalWitnessesVerify) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 8 + seed % 7;
    const Graph g = random_graph_with_edges(n, turan_edge_count(2, n) + 1, seed);
    ExtractOptions opts;
    opts.target_s = 2;
    const InvertedResult res = turan_inverted(g, 2, 1.0, opts);
    if (res) {
      EXPECT_TRUE(verify_krplus(g, *res.witness));
      EXPECT_GE(res.witness->last_part_size(), 2u);
    } else {
      EXPECT_FALSE(res.failure.empty());
    }
  }
}

TEST(Stability, BalancedBipartiteDecomposes) {
  const Graph g = complete_multipartite({{6, 6}});
  const StabilityOutcome out = stability_decompose(g, 2, 1.0, kTinyAlpha);
  ASSERT_TRUE(out.decomposition) << out.failure;
  EXPECT_FALSE(out.witness);
  EXPECT_TRUE(out.decomposition->removed.empty());
  EXPECT_EQ(out.decomposition->g0.graph.order(), 12u);
  EXPECT_TRUE(is_proper_coloring(g, out.decomposition->coloring, 2));
  EXPECT_NE(out.decomposition->coloring[0], out.decomposition->coloring[6]);
  EXPECT_EQ(check_decomposition(g, 2, kTinyAlpha, {}, out.decomposition->coloring), "");
  EXPECT_EQ(find_krplus_exact(g, {{2, 1}, true}).status, SearchStatus::kNone);
  EXPECT_TRUE(out.alpha_in_theorem_regime);
}

TEST(Stability, BipartitePlusEdgeGivesWitness) {
  const Graph g = complete_multipartite({{6, 6}, true});
  const StabilityOutcome out = stability_decompose(g, 2, 2 / std::log(12.0), kTinyAlpha);
  ASSERT_TRUE(out.witness) << out.failure;
  EXPECT_EQ(out.witness->part_sizes(), (std::vector<std::size_t>{2, 6}));
  EXPECT_EQ(out.witness_route, "turan");
  EXPECT_TRUE(verify_krplus(g, *out.witness));
}

TEST(Stability, MatchingRemovedPlusEdge) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 7; ++a) {
    for (Vertex b = 7; b < 14; ++b) {
      if (b != a + 7) edges.emplace_back(a, b);
    }
  }
  edges.emplace_back(0, 1);
  const Graph g(14, edges);
  const Rational alpha(BigInt(1), BigInt(8));
  ExtractOptions opts;
  opts.target_s = 2;
  const StabilityOutcome out = stability_decompose(g, 2, 1.0, alpha, opts);
  const KrPlusSearch oracle = find_krplus_exact(g, {{2, 2}, true});
  ASSERT_NE(oracle.status, SearchStatus::kIndeterminate);
  if (out.witness) {
    EXPECT_TRUE(verify_krplus(g, *out.witness));
    EXPECT_EQ(oracle.status, SearchStatus::kFound);
  }
  if (out.decomposition) {
    EXPECT_EQ(check_decomposition(g, 2, alpha, out.decomposition->removed, out.decomposition->coloring), "");
  }
  if (!out.certified()) EXPECT_NE(out.failure.find("stability not certified"), std::string::npos);
}

TEST(Stability, Preconditions) {
  const Graph g = complete_multipartite({{6, 6}});
  EXPECT_THROW(stability_decompose(g, 2, 1.0, 0), PreconditionError);
  EXPECT_THROW(stability_decompose(g, 2, 1.0, Rational(BigInt(1), BigInt(2))), PreconditionError);
  EXPECT_THROW(stability_decompose(g.without_edge(0, 6), 2, 1.0, kTinyAlpha), PreconditionError);
  EXPECT_THROW(stability_decompose_fixed(g, 2, kTinyAlpha), PreconditionError);
}

TEST(Stability, FlagsAlphaOutsideTheoremRegime) {
  const Graph g = complete_multipartite({{6, 6}});
  const StabilityOutcome out = stability_decompose(g, 2, 1.0, Rational(BigInt(1), BigInt(100)));
  EXPECT_FALSE(out.alpha_in_theorem_regime);
  EXPECT_TRUE(out.certified());
}

TEST(Stability, LowDegreeSetIsExact) {
  // K(6,6) minus the edges at vertex 0 except one: d(0) = 1.
  Graph g = complete_multipartite({{6, 6}});
  for (Vertex b = 7; b < 12; ++b) g = g.without_edge(0, b);
  const Rational alpha(BigInt(1), BigInt(16));
  EXPECT_EQ(low_degree_set(g, 2, alpha), (VertexSet{0}));
  EXPECT_TRUE(low_degree_set(complete_multipartite({{6, 6}}), 2, alpha).empty());
}

TEST(Stability, CheckerRejectsBadCertificates) {
  const Graph g = complete_multipartite({{6, 6}});
  std::vector<int> coloring(12, 0);
  EXPECT_NE(check_decomposition(g, 2, kTinyAlpha, {}, coloring), "");
  std::vector<int> good(12, 0);
  for (int i = 6; i < 12; ++i) good[i] = 1;
  EXPECT_EQ(check_decomposition(g, 2, kTinyAlpha, {}, good), "");
  EXPECT_NE(check_decomposition(g, 2, kTinyAlpha, {0, 1, 2}, std::vector<int>(9, 0)), "");
}

}  // namespace
}  // namespace turanforge
