#include "brute.hpp"
#include "turanforge/generators.hpp"
#include "turanforge/mindeg.hpp"
#include "turanforge/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace turanforge {
namespace {

void expect_trace_predicates(const Graph& g, std::size_t r, const ExtractionTrace& tr) {
  const auto [u, v] = tr.pivot_edge;
  EXPECT_TRUE(g.adjacent(u, v));
  EXPECT_EQ(tr.set_b, common_neighborhood(g, {u, v}));
  for (const Clique& c : tr.set_x) EXPECT_GE(c.vertices().intersected(tr.set_b).size() + 1, r);
  for (const Clique& c : tr.set_y) {
    EXPECT_TRUE(tr.set_x.contains(c));
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_GT(Rational(tr.set_y.codegree(c.without_index(i))), tr.theta);
  }
}

TEST(Mindeg, K222PlusEdge) {
  const Graph g = complete_multipartite({{2, 2, 2}, true});
  const MindegResult res = mindeg_krplus(g, 3, 1 / std::log(6.0));
  ASSERT_TRUE(res) << res.failure;
  EXPECT_EQ(res.witness->extra_edge, (Edge{0, 1}));
  EXPECT_EQ(res.witness->parts[0], (VertexSet{0, 1}));
  EXPECT_EQ(res.witness->r(), 3u);
  EXPECT_GE(res.witness->parts[1].size(), 1u);
  EXPECT_GE(res.witness->last_part_size(), 1u);
  EXPECT_TRUE(verify_krplus(g, *res.witness));
  expect_trace_predicates(g, 3, res.trace);
}

TEST(Mindeg, RequiresLargerClique) {
  EXPECT_THROW(mindeg_krplus(complete_multipartite({{3, 3}}), 2, 1.0), PreconditionError);
}

TEST(Mindeg, RequiresMinimumDegree) {
  // T_3(10)+edge: minimum degree 6 is below (2/3 - 1/81) 10.
  EXPECT_NE(mindeg_precondition_failure(turan_plus_edge(3, 10), 3), "");
  EXPECT_THROW(mindeg_krplus(turan_plus_edge(3, 10), 3, 1.0), PreconditionError);
  EXPECT_EQ(mindeg_precondition_failure(turan_plus_edge(3, 9), 3), "");
}

TEST(Mindeg, BookInT2Of12) {
  const Graph g = turan_plus_edge(2, 12);
  const MindegResult res = mindeg_krplus(g, 2, 2 / std::log(12.0));
  ASSERT_TRUE(res) << res.failure;
  const KrPlusWitness& w = *res.witness;
  EXPECT_EQ(w.parts[0].size(), 2u);
  EXPECT_GE(w.last_part_size(), 4u);
  EXPECT_LE(w.last_part_size(), brute::max_book(g));
  EXPECT_TRUE(verify_krplus(g, w));
  expect_trace_predicates(g, 2, res.trace);
  EXPECT_EQ(res.trace.h1_index, 0u);
}

TEST(Mindeg, SingletonPartsRevertToTheEdge) {
  const Graph g = turan_plus_edge(2, 10);
  ExtractOptions opts;
  opts.target_s = 1;
  const MindegResult res = mindeg_krplus(g, 2, 1.0, opts);
  ASSERT_TRUE(res);
  EXPECT_EQ(res.witness->parts[0], (VertexSet{0, 1}));
  EXPECT_EQ(res.witness->last_part_size(), 5u);
}

TEST(Mindeg, LargerPartsForR2) {
  const Graph g = turan_plus_edge(2, 20);
  ExtractOptions opts;
  opts.target_s = 3;
  const MindegResult res = mindeg_krplus(g, 2, 1.0, opts);
  ASSERT_TRUE(res) << res.failure;
  EXPECT_EQ(res.witness->parts[0].size(), 3u);
  EXPECT_TRUE(res.witness->parts[0].contains(0) && res.witness->parts[0].contains(1));
  EXPECT_TRUE(verify_krplus(g, *res.witness));
}

TEST(Mindeg, TuranFourPartsTrace) {
  const Graph g = turan_plus_edge(4, 16);
  ExtractOptions opts;
  opts.target_s = 2;
  const MindegResult res = mindeg_krplus(g, 4, 1.0, opts);
  ASSERT_TRUE(res) << res.failure;
  EXPECT_EQ(res.witness->part_sizes(), (std::vector<std::size_t>{2, 2, 2, 4}));
  EXPECT_EQ(res.trace.theta, 1);
  EXPECT_EQ(res.trace.theta_source, "floor");
  EXPECT_EQ(res.trace.selected.size(), 2u);
  EXPECT_EQ(res.trace.star_parts.size(), 3u);
  for (std::size_t j = 0; j < res.trace.star_parts.size(); ++j) {
    if (j != res.trace.h1_index) EXPECT_TRUE(res.trace.star_parts[j].minus(res.trace.set_b).empty());
  }
  EXPECT_GT(res.trace.f_edges, 0u);
  expect_trace_predicates(g, 4, res.trace);
}

TEST(Mindeg, ThetaOverrideCanEmptyY) {
  const Graph g = turan_plus_edge(3, 9);
  ExtractOptions opts;
  opts.target_s = 1;
  opts.theta = Rational(100);
  const MindegResult res = mindeg_krplus(g, 3, 1.0, opts);
  EXPECT_FALSE(res);
  EXPECT_TRUE(res.trace.set_y.empty());
  EXPECT_EQ(res.trace.theta_source, "override");
  EXPECT_NE(res.failure.find("not found at requested size"), std::string::npos);
}

TEST(Mindeg, RequestedSizeTooLarge) {
  const Graph g = turan_plus_edge(3, 9);
  ExtractOptions opts;
  opts.target_s = 4;
  const MindegResult res = mindeg_krplus(g, 3, 1.0, opts);
  EXPECT_FALSE(res);
  EXPECT_FALSE(res.failure.empty());
}

TEST(Mindeg, RequestedPartSizes) {
  ExtractOptions opts;
  EXPECT_EQ(requested_part_sizes(2 / std::log(8.0), 8, opts), (std::vector<std::size_t>{2, 1}));
  EXPECT_THROW(requested_part_sizes(0.01, 8, opts), PreconditionError);
  opts.target_s = 3;
  EXPECT_EQ(requested_part_sizes(0.01, 8, opts), (std::vector<std::size_t>{3}));
  EXPECT_EQ(default_theta(1000, 2), 1);
  EXPECT_EQ(default_theta(2048, 2), 2);
}

}  // namespace
}  // namespace turanforge
