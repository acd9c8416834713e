#pragma once

#include "turanforge/graph.hpp"

#include <vector>

namespace turanforge {

/// K_r^+(s_1, ..., s_r) inside a host graph: parts S_1..S_r, every pair in
/// different parts adjacent, plus one edge inside S_1.
struct KrPlusWitness {
  std::vector<VertexSet> parts;
  Edge extra_edge{0, 0};

  std::size_t r() const { return parts.size(); }
  std::vector<std::size_t> part_sizes() const;
  /// Size of the last part (t), or 0 when there are no parts.
  std::size_t last_part_size() const { return parts.empty() ? 0 : parts.back().size(); }
  /// Size of the smallest of parts 2..r-1 (s achieved for the balanced
  /// parts); for r = 2 this is the size of the first part.
  std::size_t balanced_part_size() const;

  /// Re-index every vertex through `to_host`.
  KrPlusWitness mapped(const std::vector<Vertex>& to_host) const;

  friend bool operator==(const KrPlusWitness&, const KrPlusWitness&) = default;
};

/// Replaces the last part by every vertex outside the other parts that is
/// adjacent to all of them. The result is valid whenever the input is.
KrPlusWitness with_maximal_last_part(const Graph& g, const KrPlusWitness& w);

}  // namespace turanforge
