#pragma once

#include "turanforge/clique.hpp"
#include "turanforge/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace turanforge {

enum class Branch { kDense, kMindeg };
const char* to_string(Branch b);

/// e > ((r-1)/(2r) + 1/(r^4 (r^2-1))) n^2, exactly.
bool dense_condition(const Graph& g, std::size_t r);

/// G has a K_{r+1} and delta(G) > (1 - 1/r - 1/r^4) n, exactly.
bool mindeg_condition(const Graph& g, std::size_t r);

struct DichotomyOutcome {
  std::optional<Branch> branch;  // empty when not certified
  InducedSubgraph sub;           // G' with its map into G
  std::vector<Vertex> deleted;   // host vertices, in deletion order
  std::uint64_t edges = 0;       // e(G')
  std::size_t min_degree = 0;    // delta(G')
  std::optional<Clique> clique;  // K_{r+1} in G' (local indices) for MINDEG
  bool dense_holds = false;      // dense condition on the returned G'
  bool mindeg_holds = false;
  std::string failure;

  bool certified() const { return branch.has_value(); }
};

/// Deletes lowest-index minimum-degree vertices while the degree condition
/// fails, testing the minimum-degree condition and then the density
/// condition at the start and after each deletion. Stops uncertified when
/// the order would drop to (1 - 1/r^2) n or below. Requires e(G) > t_r(n).
DichotomyOutcome dichotomy_subgraph(const Graph& g, std::size_t r);

}  // namespace turanforge
