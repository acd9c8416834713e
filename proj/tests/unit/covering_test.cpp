#include "brute.hpp"
#include "turanforge/covering.hpp"
#include "turanforge/generators.hpp"
#include "turanforge/oracle.hpp"

#include <gtest/gtest.h>

namespace turanforge {
namespace {

TEST(Covers, DirectPredicate) {
  const Graph k222 = complete_multipartite({{2, 2, 2}});
  const CliqueSet m = enumerate_cliques(k222, 3);
  EXPECT_TRUE(covers(m, {{0}, {2}, {4, 5}}));
  EXPECT_FALSE(covers(m, {{0}, {1}}));
  EXPECT_FALSE(covers(m, {{0}, {0, 2}}));
  const CliqueSet one(k222, 3, {Clique(k222, {0, 2, 4})});
  EXPECT_FALSE(covers(one, {{0}, {2}, {5}}));
}

TEST(CoveredMultipartite, AllTrianglesOfK222) {
  const Graph g = complete_multipartite({{2, 2, 2}});
  const CliqueSet m = enumerate_cliques(g, 3);
  const CoveringResult res = covered_multipartite(g, m, 1, 2);
  ASSERT_TRUE(res);
  const auto& parts = *res.parts;
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].size(), 1u);
  EXPECT_EQ(parts[1].size(), 1u);
  EXPECT_EQ(parts[2].size(), 2u);
  EXPECT_TRUE(covers(m, parts));
}

TEST(CoveredMultipartite, SingleTriangle) {
  const Graph g = complete_multipartite({{2, 2, 2}});
  const CliqueSet m(g, 3, {Clique(g, {1, 3, 4})});
  const CoveringResult res = covered_multipartite(g, m, 1, 1);
  ASSERT_TRUE(res);
  EXPECT_EQ(*res.parts, (std::vector<VertexSet>{{1}, {3}, {4}}));
}

TEST(CoveredMultipartite, NotFoundIsAResult) {
  const Graph g = complete_multipartite({{2, 2, 2}});
  const CliqueSet m(g, 3, {Clique(g, {1, 3, 4})});
  const CoveringResult res = covered_multipartite(g, m, 2, 1);
  EXPECT_FALSE(res);
  EXPECT_NE(res.failure.find("not found at requested size"), std::string::npos);
}

TEST(CoveredMultipartite, Preconditions) {
  const Graph g = complete_multipartite({{2, 2, 2}});
  EXPECT_THROW(covered_multipartite(g, CliqueSet(g, 3), 1, 1), PreconditionError);
  EXPECT_THROW(covered_multipartite(g, enumerate_cliques(g, 3), 0, 1), PreconditionError);
  const Graph other = complete_multipartite({{1, 1, 1}});
  EXPECT_THROW(covered_multipartite(g, enumerate_cliques(other, 3), 1, 1), PreconditionError);
}

TEST(CoveredMultipartite, RandomGraphAgreesWithExhaustiveSearch) {
  const Graph g = random_graph_with_edges(14, 55, 3);
  const CliqueSet m = enumerate_cliques(g, 3);
  const CoveringResult res = covered_multipartite(g, m, 2, 2);
  EXPECT_EQ(res.parts.has_value(), brute::covered_family_exists(m, {2, 2}, 2));
  if (res) EXPECT_TRUE(covers(m, *res.parts));
}

TEST(CoveredMultipartite, SweepAgreesWithExhaustiveSearch) {
  int feasible = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 8 + seed % 4;
    const Graph g = random_graph_with_edges(n, n * (n - 1) / 2 * 6 / 10, seed);
    const CliqueSet m = enumerate_cliques(g, 3);
    if (m.empty()) continue;
    for (std::size_t s : {1, 2}) {
      for (std::size_t t : {1, 2, 3}) {
        const CoveringResult res = covered_multipartite(g, m, s, t);
        ASSERT_FALSE(res.exhausted);
        EXPECT_EQ(res.parts.has_value(), brute::covered_family_exists(m, {s, s}, t)) << seed << " " << s << " " << t;
        if (res) {
          EXPECT_TRUE(covers(m, *res.parts));
          EXPECT_EQ((*res.parts)[0].size(), s);
          EXPECT_GE(res.parts->back().size(), t);
        }
        feasible += res ? 1 : 0;
      }
    }
  }
  EXPECT_GT(feasible, 20);
}

TEST(CoveredMultipartite, VisitorEnumeratesCoveredFamilies) {
  const Graph g = complete_multipartite({{2, 2, 2}});
  const CliqueSet m = enumerate_cliques(g, 3);
  std::size_t count = 0;
  for_each_covered_multipartite(g, m, CoveringShape{{1, 1}, 1}, [&](const std::vector<VertexSet>& parts) {
    EXPECT_TRUE(covers(m, parts));
    ++count;
    return true;
  });
  EXPECT_GT(count, 4u);
}

TEST(CoveredMultipartite, GeneralShape) {
  const Graph g = turan_plus_edge(3, 10);
  const CliqueSet m = enumerate_cliques(g, 4);
  const CoveringResult res = covered_multipartite(g, m, CoveringShape{{1, 1, 2}, 2});
  ASSERT_TRUE(res);
  EXPECT_EQ(res.parts->size(), 4u);
  EXPECT_TRUE(covers(m, *res.parts));
}

TEST(Assemble, K222ToBook) {
  const Graph g = complete_multipartite({{2, 2, 2}});
  const KrPlusWitness w = assemble_krplus(g, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_EQ(w.parts, (std::vector<VertexSet>{{0, 2}, {4, 5}}));
  EXPECT_EQ(w.extra_edge, (Edge{0, 2}));
  EXPECT_TRUE(verify_krplus(g, w));
}

TEST(Assemble, K114) {
  const Graph g = complete_multipartite({{1, 1, 4}});
  const KrPlusWitness w = assemble_krplus(g, {{0}, {1}, {2, 3, 4, 5}});
  EXPECT_EQ(w.part_sizes(), (std::vector<std::size_t>{2, 4}));
  EXPECT_TRUE(verify_krplus(g, w));
}

TEST(Assemble, K2222) {
  const Graph g = complete_multipartite({{2, 2, 2, 2}});
  const KrPlusWitness w = assemble_krplus(g, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  EXPECT_EQ(w.part_sizes(), (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_TRUE(verify_krplus(g, w));
}

TEST(Assemble, RequestedFirstSize) {
  const Graph g = complete_multipartite({{3, 1, 2}});
  const KrPlusWitness w = assemble_krplus(g, {{0, 1, 2}, {3}, {4, 5}}, 4);
  EXPECT_EQ(w.part_sizes(), (std::vector<std::size_t>{4, 2}));
  EXPECT_TRUE(verify_krplus(g, w));
  EXPECT_THROW(assemble_krplus(g, {{0, 1, 2}, {3}, {4, 5}}, 5), PreconditionError);
}

TEST(Assemble, RejectsDegenerateShapes) {
  const Graph g = complete_multipartite({{2, 2, 2}});
  EXPECT_THROW(assemble_krplus(g, {{0}, {2}}), PreconditionError);
  EXPECT_THROW(assemble_krplus(g, {{0, 1}, {}, {4}}), PreconditionError);
  EXPECT_THROW(assemble_krplus(g, {{0, 1}, {1, 2}, {4}}), PreconditionError);
  EXPECT_THROW(assemble_krplus(g, {{0}, {1}, {4}}), PreconditionError);
}

}  // namespace
}  // namespace turanforge
