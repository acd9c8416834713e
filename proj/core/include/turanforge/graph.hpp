#pragma once

#include "turanforge/types.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace turanforge {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Collects the set bits of `b` as a vertex set.
VertexSet to_vertex_set(const Bits& b);
/// Bitset of width `order` with the members of `s` set.
Bits to_bits(const VertexSet& s, std::size_t order);

/// Immutable simple undirected graph on vertices 0..order-1 with one
/// adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;

  /// Duplicate pairs (in either orientation) collapse to a single edge.
  /// Throws PreconditionError on a self-loop or an out-of-range endpoint.
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bits& neighbors(Vertex u) const { return rows_[u]; }
  std::size_t degree(Vertex u) const { return rows_[u].count(); }
  /// Zero for the graph of order zero.
  std::size_t min_degree() const;
  /// Lowest-indexed vertex of minimum degree. Requires order() > 0.
  Vertex min_degree_vertex() const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  /// Bitset of width order() with every vertex set.
  Bits all_vertices() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  void check_vertex(Vertex v, const char* what) const;

  std::vector<Bits> rows_;
  std::size_t edge_count_ = 0;
};

/// G[U] together with the map from its vertex indices back to the host.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;

  Vertex host_vertex(Vertex local) const { return to_host[local]; }
  VertexSet to_host_set(const VertexSet& local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset);

/// Vertices adjacent to every member of R. For R empty this is V(G).
VertexSet common_neighborhood(const Graph& g, const VertexSet& r);
Bits common_neighborhood_bits(const Graph& g, const VertexSet& r);

/// Applies a vertex relabelling: vertex v of `g` becomes perm[v].
Graph permuted(const Graph& g, std::span<const Vertex> perm);

}  // namespace turanforge
