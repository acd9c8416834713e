#pragma once

#include "turanforge/inverted.hpp"

#include <optional>
#include <string>
#include <vector>

namespace turanforge {

/// G_0 = G - M_eps with a proper r-coloring.
struct Decomposition {
  VertexSet removed;           // M_eps
  InducedSubgraph g0;
  std::vector<int> coloring;   // indexed by G_0 vertices
};

/// The measured quantities behind a stability run.
struct StabilityMeasures {
  std::size_t n = 0;
  std::uint64_t edges = 0;
  std::size_t removed = 0;      // |M_eps|
  std::size_t g0_order = 0;
  std::size_t g0_min_degree = 0;
  bool order_bound = false;     // |G_0| >= (1 - sqrt(2 alpha)) n
  bool degree_bound = false;    // delta(G_0) > (1 - 1/r - 2 sqrt(2 alpha)) n
  bool r_partite = false;
};

struct StabilityOutcome {
  std::optional<KrPlusWitness> witness;
  std::string witness_route;  // "turan", "removal" or "g0-mindeg"
  std::optional<Decomposition> decomposition;
  StabilityMeasures measures;
  bool alpha_in_theorem_regime = false;  // alpha < r^-8 / 8
  std::optional<InvertedResult> inverted;  // the last turan_inverted run, if any
  std::optional<ExtractionTrace> trace;    // the G_0 minimum-degree run, if any
  std::size_t s_target = 0;
  std::size_t t_min = 0;
  TheoremTargets theorem;
  std::string failure;

  bool certified() const { return witness.has_value() || decomposition.has_value(); }
};

/// Members of M_eps: d(u) <= (1 - 1/r - sqrt(2 alpha)) n, decided exactly.
VertexSet low_degree_set(const Graph& g, std::size_t r, const Rational& alpha);

/// Re-checks a decomposition: G_0 is G minus `removed`, the order and
/// minimum-degree bounds hold, and the coloring is proper with r colors.
/// Returns "" or the first failure.
std::string check_decomposition(const Graph& g, std::size_t r, const Rational& alpha, const VertexSet& removed,
                                const std::vector<int>& coloring);

/// Either a K_r^+(f, s, ..., s, t) or the decomposition. Requires
/// 0 < alpha < 1/r and e(G) >= (1 - 1/r - alpha) n^2 / 2.
StabilityOutcome stability_decompose(const Graph& g, std::size_t r, double c, const Rational& alpha,
                                     const ExtractOptions& options = {});

/// The fixed-constant form, c = r^(-(r+7)(r+1)) / 2; requires n >= e^(2/c).
StabilityOutcome stability_decompose_fixed(const Graph& g, std::size_t r, const Rational& alpha,
                                           const ExtractOptions& options = {});

}  // namespace turanforge
