#pragma once

#include "turanforge/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace turanforge {

/// Bipartite graph with sides A = {0..size_a-1} and B = {0..size_b-1};
/// row(a) is the neighborhood of a in B.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t size_a, std::size_t size_b);
  /// Edges are (a, b) pairs; duplicates collapse.
  BipartiteGraph(std::size_t size_a, std::size_t size_b, const std::vector<Edge>& edges);
  /// Takes one B-bitset per vertex of A; every row must have width size_b.
  BipartiteGraph(std::size_t size_b, std::vector<Bits> rows);

  std::size_t size_a() const { return rows_.size(); }
  std::size_t size_b() const { return size_b_; }
  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
  const Bits& row(Vertex a) const { return rows_[a]; }
  std::size_t degree_a(Vertex a) const { return rows_[a].count(); }
  std::size_t edge_count() const;

  /// Vertices of B adjacent to all of S (all of B when S is empty).
  Bits common_neighbors(const VertexSet& s) const;

  /// Uniform random bipartite graph with exactly `edges` edges.
  static BipartiteGraph random(std::size_t size_a, std::size_t size_b, std::uint64_t edges, std::uint64_t seed);

 private:
  std::size_t size_b_ = 0;
  std::vector<Bits> rows_;
};

/// K_2(s, t): S in A, T = the full common neighborhood of S in B.
struct KstWitness {
  VertexSet s;
  VertexSet t;
};

struct KstSearchOptions {
  /// Exhaustive search over s-subsets of A when C(|A|, s) is at most this.
  std::uint64_t exact_budget = 1'000'000;
  std::size_t random_restarts = 2000;
  std::uint64_t seed = 0;
};

struct KstSearchResult {
  KstWitness witness;
  bool exact = false;  // witness.t is a proven maximum over all s-subsets
};

/// Finds an s-subset S of A whose common neighborhood T in B is as large as
/// possible. Exact branch-and-bound when within budget (returning the
/// lexicographically first maximizer); otherwise the best of a greedy chain,
/// an exact pass over the 2s highest-degree vertices of A, and
/// degree-biased random restarts.
KstSearchResult kst_search(const BipartiteGraph& f, std::size_t s, const KstSearchOptions& options = {});

/// |T| > n * (alpha/2)^s, evaluated exactly.
bool beats_kst_bound(std::size_t t, std::size_t n, const Rational& alpha, std::size_t s);

/// Smallest integer t with t > n * (alpha/2)^s.
BigInt kst_bound_floor_plus_one(std::size_t n, const Rational& alpha, std::size_t s);

struct KstResult {
  std::optional<KstWitness> witness;
  std::size_t s = 0;
  bool exact = false;
  std::string failure;
};

/// Dense bipartite graphs contain a K_2(s,t) with s = floor(c ln n) in A and
/// t > n(alpha/2)^s in B (n = |B|). Checks 1 <= c ln n <= alpha*m/2 + 1 and
/// e(F) >= alpha*m*n, throwing PreconditionError naming the failed one.
/// The returned witness always satisfies the bound; exact search never
/// misses it (InternalFault otherwise), randomized search reports failure.
KstResult bipartite_kst(const BipartiteGraph& f, const Rational& alpha, double c, const KstSearchOptions& options = {});

/// floor(c ln n) with a guard: when c ln n is within 1e-9 of an integer k,
/// both k and k-1 are returned (larger first). Zero values are dropped.
std::vector<std::size_t> log_part_sizes(double c, std::size_t n);

/// C(n, k) saturated at `cap`.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

}  // namespace turanforge
