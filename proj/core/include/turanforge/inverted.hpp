#pragma once

#include "turanforge/dichotomy.hpp"
#include "turanforge/mindeg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace turanforge {

/// Sizes the theorems promise for (c, n), for side-by-side reporting.
struct TheoremTargets {
  double c = 0;           // effective constant (s / ln n when s is forced)
  std::size_t s = 0;      // floor(c ln n)
  std::size_t t = 0;      // ceil(n^(1 - exponent))
  double exponent = 0;    // sqrt(c), 2 sqrt(c) or c r^3
  bool in_regime = false; // 2/ln n <= c <= the theorem's upper bound
};

enum class TargetKind { kTuran, kStability, kMindeg };
TheoremTargets theorem_targets(TargetKind kind, std::size_t r, std::size_t n, double c, const ExtractOptions& options);

struct InvertedResult {
  std::optional<KrPlusWitness> witness;  // host indices, last part maximal
  std::optional<Branch> branch;          // branch that produced the witness, else the certified one
  DichotomyOutcome dichotomy;
  std::optional<ExtractionTrace> trace;          // MINDEG runs
  std::optional<std::vector<VertexSet>> covered; // DENSE: covered K_{r+1}, host indices
  std::size_t s_target = 0;
  std::size_t t_min = 0;
  TheoremTargets theorem;
  std::string failure;

  explicit operator bool() const { return witness.has_value(); }
};

/// K_r^+(f, s, ..., s, t) in a graph with more than t_r(n) edges, where
/// f = max(s, 2) and t >= t_min. Goes through dichotomy_subgraph and then
/// the minimum-degree pipeline or the dense covering route.
InvertedResult turan_inverted(const Graph& g, std::size_t r, double c, const ExtractOptions& options = {});

/// The fixed-constant form, c = r^(-(r+7)(r+1)); requires n >= e^(2/c).
InvertedResult turan_inverted_fixed(const Graph& g, std::size_t r, const ExtractOptions& options = {});

}  // namespace turanforge
