#include "brute.hpp"
#include "report.hpp"
#include "turanforge/generators.hpp"
#include "turanforge/graph_io.hpp"
#include "turanforge/oracle.hpp"
#include "turanforge/prune.hpp"
#include "turanforge/random.hpp"

#include <gtest/gtest.h>

namespace turanforge {
namespace {

Edge random_non_edge(const Graph& g, Rng& rng) {
  for (;;) {
    const Vertex a = uniform_below(rng, g.order()), b = uniform_below(rng, g.order());
    if (a != b && !g.adjacent(a, b)) return {a, b};
  }
}

TEST(Property, AddingAnEdgeNeverLowersCounts) {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 6 + uniform_below(rng, 12);
    const std::uint64_t pairs = n * (n - 1) / 2;
    const Graph g = random_graph_with_edges(n, uniform_below(rng, pairs), rng());
    const auto [a, b] = random_non_edge(g, rng);
    const Graph h = g.with_edge(a, b);
    for (std::size_t r = 2; r <= 4; ++r) {
      EXPECT_LE(count_cliques(g, r), count_cliques(h, r));
      EXPECT_LE(joint_size(g, r).count, joint_size(h, r).count);
    }
  }
}

TEST(Property, PruneFixpointIgnoresScanOrder) {
  Rng rng(8);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 7 + uniform_below(rng, 8);
    const Graph g = random_graph_with_edges(n, n * (n - 1) / 2 * 6 / 10, rng());
    const std::size_t k = 2 + uniform_below(rng, 3);
    const CliqueSet x = enumerate_cliques(g, k);
    if (x.empty()) continue;
    const Rational theta(BigInt(uniform_below(rng, 6)), BigInt(1 + uniform_below(rng, 2)));
    const PruneResult base = prune_min_codegree(x, theta);
    EXPECT_EQ(check_prune_result(x, theta, base), "");
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const PruneResult other = prune_min_codegree(x, theta, PruneOrder{rng()});
      EXPECT_EQ(brute::as_sets(other.kept), brute::as_sets(base.kept));
    }
  }
}

TEST(Property, InvertedWitnessesVerifyOnRandomDenseGraphs) {
  Rng rng(17);
  int found = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = 2 + uniform_below(rng, 2);
    const std::size_t n = 3 * r + uniform_below(rng, 14);
    const std::uint64_t pairs = n * (n - 1) / 2;
    const std::uint64_t lo = turan_edge_count(r, n) + 1;
    const Graph g = random_graph_with_edges(n, lo + uniform_below(rng, pairs - lo + 1), rng());
    ExtractOptions opts;
    opts.target_s = 1 + uniform_below(rng, 2);
    const InvertedResult res = turan_inverted(g, r, 0, opts);
    if (!res) continue;
    ++found;
    EXPECT_TRUE(verify_krplus(g, *res.witness));
    EXPECT_GE(res.witness->last_part_size(), res.t_min);
    if (res.trace) {
      for (const Clique& c : res.trace->set_y) {
        EXPECT_TRUE(res.trace->set_x.contains(c));
        EXPECT_GE(c.vertices().intersected(res.trace->set_b).size() + 1, r);
      }
    }
  }
  EXPECT_GT(found, 40);
}

TEST(Property, MindegTraceSatisfiesDefinitions) {
  for (std::size_t r = 2; r <= 4; ++r) {
    for (std::size_t n = 3 * r; n <= 3 * r + 12; n += r) {
      const Graph g = turan_plus_edge(r, n);
      if (!mindeg_precondition_failure(g, r).empty()) continue;
      ExtractOptions opts;
      opts.target_s = 2;
      const MindegResult res = mindeg_krplus(g, r, 0, opts);
      const ExtractionTrace& t = res.trace;
      const auto [u, v] = t.pivot_edge;
      ASSERT_TRUE(g.adjacent(u, v));
      EXPECT_EQ(t.set_b, common_neighborhood(g, {u, v}));
      for (const Clique& c : t.set_y) {
        for (std::size_t i = 0; i < c.size(); ++i) EXPECT_GT(Rational(t.set_y.codegree(c.without_index(i))), t.theta);
      }
      if (res) EXPECT_TRUE(verify_krplus(g, *res.witness));
    }
  }
}

TEST(Property, EveryExtractWitnessPassesVerify) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 8 + uniform_below(rng, 10);
    const Graph g = random_graph_with_edges(n, turan_edge_count(2, n) + 1 + uniform_below(rng, 4), rng());
    app::ExtractParams p;
    p.r = 2;
    p.target_s = 2;
    const app::ExtractRun run = app::run_extract(g, Json{{"trial", trial}}, p);
    if (run.exit_code != app::kOk) continue;
    std::string diagnostic;
    EXPECT_EQ(app::verify_certificate(g, Json::parse(run.report.dump()), diagnostic), app::kOk) << diagnostic;
  }
  const Graph k = complete_multipartite({{7, 7}});
  app::ExtractParams p;
  p.r = 2;
  p.target_s = 2;
  p.alpha = Rational(BigInt(1), BigInt(4096));
  const app::ExtractRun run = app::run_extract(k, Json{}, p);
  ASSERT_EQ(run.exit_code, app::kOk);
  std::string diagnostic;
  EXPECT_EQ(app::verify_certificate(k, Json::parse(run.report.dump()), diagnostic), app::kOk) << diagnostic;
  EXPECT_EQ(app::verify_certificate(k.without_edge(0, 7), Json::parse(run.report.dump()), diagnostic),
            app::kInvalidCertificate);
}

TEST(Property, EdgeListSerializationIsStable) {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 30);
    const Graph g = random_graph_with_edges(n, uniform_below(rng, n * (n - 1) / 2 + 1), rng());
    const std::string text = to_edge_list(g);
    EXPECT_EQ(to_edge_list(parse_edge_list(text)), text);
  }
}

}  // namespace
}  // namespace turanforge
