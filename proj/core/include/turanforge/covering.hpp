#pragma once

#include "turanforge/clique.hpp"
#include "turanforge/witness.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace turanforge {

/// The graph (V, K_2(M)): u ~ v when some member of M contains both.
Graph covered_pairs_graph(const CliqueSet& m);

/// True when every pair of vertices in different parts lies inside a member
/// of `m` and the parts are pairwise disjoint. Checked pair by pair against
/// the members themselves.
bool covers(const CliqueSet& m, const std::vector<VertexSet>& parts);

struct CoveringOptions {
  std::uint64_t node_budget = 1'000'000;  // backtracking fallback
};

/// Part sizes of the requested multipartite graph: `sizes` for all parts
/// but the last, and at least `last_min` vertices in the last one.
struct CoveringShape {
  std::vector<std::size_t> sizes;
  std::size_t last_min = 1;

  std::size_t parts() const { return sizes.size() + 1; }
};

struct CoveringResult {
  std::optional<std::vector<VertexSet>> parts;  // last part maximal
  std::string failure;                          // set when !parts
  std::string strategy;                         // "greedy" or "backtracking"
  std::uint64_t nodes = 0;
  bool exhausted = false;  // backtracking ran out of budget

  explicit operator bool() const { return parts.has_value(); }
};

/// Complete multipartite subgraph with M.clique_size() parts covered by
/// M: parts 1..r-1 of size s and a last part of size >= t_min.
CoveringResult covered_multipartite(const Graph& g, const CliqueSet& m, std::size_t s, std::size_t t_min,
                                    const CoveringOptions& options = {});

/// Same with an arbitrary shape; the number of parts need not match the
/// clique size of M.
CoveringResult covered_multipartite(const Graph& g, const CliqueSet& m, const CoveringShape& shape,
                                    const CoveringOptions& options = {});

/// Every covered family of the shape, greedy candidate first, then the
/// backtracking enumeration (the greedy family may repeat). `visit` returns
/// false to stop. Returns the number of backtracking nodes used.
std::uint64_t for_each_covered_multipartite(const Graph& g, const CliqueSet& m, const CoveringShape& shape,
                                            const std::function<bool(const std::vector<VertexSet>&)>& visit,
                                            const CoveringOptions& options = {});

/// K_{r+1}(P_1, ..., P_{r+1}) in G to K_r^+: the first part is
/// first_size - 1 vertices of P_1 plus the first vertex of P_2, which
/// carries the extra edge; P_3..P_{r+1} are kept. `first_size` defaults to
/// max(|P_1|, 2).
KrPlusWitness assemble_krplus(const Graph& g, const std::vector<VertexSet>& parts,
                              std::optional<std::size_t> first_size = std::nullopt);

}  // namespace turanforge
