#pragma once

#include "turanforge/bipartite.hpp"
#include "turanforge/clique.hpp"
#include "turanforge/covering.hpp"
#include "turanforge/witness.hpp"

#include <optional>
#include <string>
#include <vector>

namespace turanforge {

/// Knobs shared by the extraction pipelines.
struct ExtractOptions {
  std::optional<std::size_t> target_s;  // replaces floor(c ln n)
  std::optional<std::size_t> target_t;  // minimum last part; defaults to s
  std::optional<Rational> theta;        // pruning threshold override
  KstSearchOptions kst;
  CoveringOptions covering;
  std::size_t covering_candidates = 32;  // covered families tried per size
};

/// Part sizes to attempt, largest first.
std::vector<std::size_t> requested_part_sizes(double c, std::size_t n, const ExtractOptions& options);

/// Default threshold: max(n / r^(r+8), 1).
Rational default_theta(std::size_t n, std::size_t r);

struct ExtractionTrace {
  Edge pivot_edge{0, 0};
  std::uint64_t pivot_joint = 0;
  VertexSet set_b;
  CliqueSet set_x;
  CliqueSet set_y;
  Rational theta;
  std::string theta_source;  // "override", "theorem" or "floor"
  std::size_t prune_steps = 0;

  // Filled for the attempt that produced the witness, or the last attempt.
  std::size_t s = 0;
  std::size_t m = 0;
  std::vector<VertexSet> covered_parts;  // H
  std::vector<Clique> transversals;      // A
  std::size_t f_edges = 0;               // e(F), F between A and B
  std::vector<Clique> selected;          // S
  VertexSet t_set;                       // T inside B
  std::vector<VertexSet> star_parts;     // H*
  std::size_t h1_index = 0;              // part of H* that may leave B
  std::size_t attempts = 0;
  std::string stage;                     // last stage reached
};

struct MindegResult {
  std::optional<KrPlusWitness> witness;
  ExtractionTrace trace;
  std::string failure;

  explicit operator bool() const { return witness.has_value(); }
};

/// Hypotheses of the minimum-degree pipeline: G has a K_{r+1} and
/// delta(G) > (1 - 1/r - 1/r^4) n. Returns "" or the failed check.
std::string mindeg_precondition_failure(const Graph& g, std::size_t r);

/// K_r^+(f, s, ..., s, t) with f = max(s, 2), extra edge uv, via the
/// pivot / prune / cover / bipartite stages. Throws PreconditionError when
/// the hypotheses fail.
MindegResult mindeg_krplus(const Graph& g, std::size_t r, double c, const ExtractOptions& options = {});

}  // namespace turanforge
