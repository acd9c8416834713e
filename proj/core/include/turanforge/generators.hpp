#pragma once

#include "turanforge/graph.hpp"

#include <cstdint>
#include <vector>

namespace turanforge {

/// Part sizes of a complete multipartite graph, optionally with one extra
/// edge inside the first part.
struct PartSpec {
  std::vector<std::size_t> sizes;
  bool plus_edge = false;

  std::size_t order() const;
  /// Throws PreconditionError when the invariants fail.
  void validate() const;
};

/// Balanced part sizes, larger parts first.
std::vector<std::size_t> turan_part_sizes(std::size_t r, std::size_t n);

/// Exact edge count of the r-partite Turan graph of order n.
std::uint64_t turan_edge_count(std::size_t r, std::size_t n);

/// Complete r-partite graph with balanced parts; the part holding vertex 0
/// is a largest part and parts occupy consecutive index ranges.
Graph turan_graph(std::size_t r, std::size_t n);

/// turan_graph(r, n) plus the edge (0, 1), which lies inside the first part.
/// Requires the first part to have at least two vertices.
Graph turan_plus_edge(std::size_t r, std::size_t n);

/// Parts occupy consecutive index ranges in the order given; the extra
/// edge, when requested, joins the first two vertices of part 1.
Graph complete_multipartite(const PartSpec& spec);

/// Uniform random graph with exactly m edges (selection sampling over the
/// n(n-1)/2 pairs in lexicographic order). Same seed, same graph.
Graph random_graph_with_edges(std::size_t n, std::uint64_t m, std::uint64_t seed);

}  // namespace turanforge
