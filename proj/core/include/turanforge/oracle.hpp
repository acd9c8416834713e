#pragma once

// Exponential-time ground truth. Nothing in this header depends on the
// extraction pipelines, so pipeline bugs cannot leak into the checks.

#include "turanforge/bipartite.hpp"
#include "turanforge/generators.hpp"
#include "turanforge/graph.hpp"
#include "turanforge/witness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace turanforge {

/// Default search-node budget, or TURANFORGE_BUDGET when set to a positive
/// integer.
std::uint64_t default_node_budget();

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;  // first violated clause when !ok

  explicit operator bool() const { return ok; }
};

/// Checks, in order: at least one part, |S_1| >= 2, no empty part, vertices
/// in range, parts disjoint, extra edge inside S_1, extra edge present,
/// every cross-part pair adjacent.
VerifyResult verify_krplus(const Graph& g, const KrPlusWitness& w);

struct MaxKst {
  std::size_t t = 0;
  VertexSet s;
};

/// Plain enumeration of all s-subsets of A; the lexicographically first
/// maximizer of the common-neighborhood size.
MaxKst max_kst(const BipartiteGraph& f, std::size_t s);

enum class SearchStatus { kFound, kNone, kIndeterminate };
const char* to_string(SearchStatus s);

struct KrPlusSearch {
  SearchStatus status = SearchStatus::kNone;
  std::optional<KrPlusWitness> witness;  // parts in PartSpec order
  std::uint64_t nodes = 0;
};

/// Backtracking search for a copy of complete_multipartite(spec) in G
/// (not necessarily induced). The extra edge, when requested, is fixed
/// first; parts 2..r are filled largest first, equal-size parts with
/// increasing smallest vertex, vertices inside a part in increasing order.
/// Exceeding `node_budget` gives kIndeterminate.
KrPlusSearch find_krplus_exact(const Graph& g, const PartSpec& spec, std::uint64_t node_budget = default_node_budget());

struct MaxBalanced {
  SearchStatus status = SearchStatus::kFound;  // kIndeterminate if any probe ran out of budget
  std::size_t s = 0;              // largest s >= 2 with K_r^+(s,...,s) in G, else 0
  bool base_shape_found = false;  // K_r^+(2,1,...,1) in G
};

/// Probes K_r^+(2,1,..,1), then s = 2, 3, ... while present. Containment is
/// monotone in s, so the first miss ends the search.
MaxBalanced max_balanced_krplus(const Graph& g, std::size_t r, std::uint64_t node_budget = default_node_budget());

/// Largest t with K_r^+(first, s, ..., s, t) in G, 0 if none (t >= 1).
struct Frontier {
  SearchStatus status = SearchStatus::kFound;
  std::size_t t = 0;
};
Frontier krplus_frontier(const Graph& g, std::size_t r, std::size_t first, std::size_t s,
                         std::uint64_t node_budget = default_node_budget());

/// A proper coloring with colors 0..r-1, found by exact backtracking, or
/// nullopt when none exists.
std::optional<std::vector<int>> is_r_partite(const Graph& g, std::size_t r);

/// True when `coloring` assigns every vertex a color in [0, r) and no edge
/// is monochromatic.
bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, std::size_t r);

}  // namespace turanforge
