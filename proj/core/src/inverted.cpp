#include "turanforge/inverted.hpp"

#include "turanforge/covering.hpp"
#include "turanforge/generators.hpp"
#include "turanforge/oracle.hpp"

#include <cmath>

namespace turanforge {

TheoremTargets theorem_targets(TargetKind kind, std::size_t r, std::size_t n, double c, const ExtractOptions& options) {
  TheoremTargets p;
  const double ln_n = n >= 2 ? std::log(static_cast<double>(n)) : 0.0;
  p.c = options.target_s && ln_n > 0 ? static_cast<double>(*options.target_s) / ln_n : c;
  p.s = options.target_s ? *options.target_s : (ln_n > 0 ? static_cast<std::size_t>(std::floor(p.c * ln_n + 1e-9)) : 0);
  const double rd = static_cast<double>(r);
  double upper = 0;
  switch (kind) {
    case TargetKind::kTuran:
      p.exponent = std::sqrt(p.c);
      upper = std::pow(rd, -(rd + 7) * (rd + 1));
      break;
    case TargetKind::kStability:
      p.exponent = 2 * std::sqrt(p.c);
      upper = std::pow(rd, -(rd + 7) * (rd + 1)) / 2;
      break;
    case TargetKind::kMindeg:
      p.exponent = p.c * rd * rd * rd;
      upper = std::pow(rd, -(rd + 8) * rd);
      break;
  }
  const double t = std::ceil(std::pow(static_cast<double>(n), 1 - p.exponent) - 1e-9);
  p.t = t > 0 ? static_cast<std::size_t>(t) : 0;
  p.in_regime = ln_n > 0 && 2 / ln_n <= p.c && p.c <= upper;
  return p;
}

namespace {

std::optional<KrPlusWitness> finalize(const Graph& g, const InducedSubgraph& sub, const KrPlusWitness& local,
                                      std::size_t t_min, const char* where) {
  KrPlusWitness w = with_maximal_last_part(g, local.mapped(sub.to_host));
  if (const VerifyResult check = verify_krplus(g, w); !check) {
    throw InternalFault(std::string("turan_inverted: ") + where + " witness is invalid: " + check.diagnostic);
  }
  if (w.last_part_size() < t_min) return std::nullopt;
  return w;
}

bool run_mindeg(const Graph& g, std::size_t r, double c, std::size_t s, std::size_t t_min, const ExtractOptions& options,
                InvertedResult& out) {
  const InducedSubgraph& sub = out.dichotomy.sub;
  ExtractOptions local = options;
  local.target_s = s;
  local.target_t = t_min;
  const MindegResult res = mindeg_krplus(sub.graph, r, c, local);
  out.trace = res.trace;
  if (!res.witness) {
    out.failure = "MINDEG: " + res.failure;
    return false;
  }
  out.witness = finalize(g, sub, *res.witness, t_min, "MINDEG");
  if (!out.witness) {
    out.failure = "MINDEG: last part below t_min";
    return false;
  }
  out.branch = Branch::kMindeg;
  return true;
}

bool run_dense(const Graph& g, std::size_t r, std::size_t s, std::size_t t_min, const ExtractOptions& options,
               InvertedResult& out) {
  const InducedSubgraph& sub = out.dichotomy.sub;
  const CliqueSet m = enumerate_cliques(sub.graph, r + 1);
  if (m.empty()) {
    out.failure = "DENSE: G' has no K_" + std::to_string(r + 1);
    return false;
  }
  const std::size_t f = std::max<std::size_t>(s, 2);
  std::vector<std::size_t> sizes = {f - 1, 1};
  sizes.insert(sizes.end(), r - 2, s);
  const CoveringResult cover = covered_multipartite(sub.graph, m, CoveringShape{sizes, t_min}, options.covering);
  if (!cover) {
    out.failure = "DENSE: " + cover.failure;
    return false;
  }
  std::vector<VertexSet> host_parts;
  for (const auto& p : *cover.parts) host_parts.push_back(sub.to_host_set(p));
  out.covered = host_parts;
  const KrPlusWitness local = assemble_krplus(sub.graph, *cover.parts, f);
  out.witness = finalize(g, sub, local, t_min, "DENSE");
  if (!out.witness) {
    out.failure = "DENSE: last part below t_min";
    return false;
  }
  out.branch = Branch::kDense;
  return true;
}

}  // namespace

InvertedResult turan_inverted(const Graph& g, std::size_t r, double c, const ExtractOptions& options) {
  if (r < 2) throw PreconditionError("turan_inverted: r must be >= 2");
  const std::size_t n = g.order();
  const std::uint64_t tr = turan_edge_count(r, n);
  if (g.edge_count() <= tr) {
    throw PreconditionError("turan_inverted: edge count " + std::to_string(g.edge_count()) + " <= t_r(n) = " + std::to_string(tr));
  }
  const std::vector<std::size_t> sizes = requested_part_sizes(c, n, options);

  InvertedResult out;
  out.theorem = theorem_targets(TargetKind::kTuran, r, n, c, options);
  out.dichotomy = dichotomy_subgraph(g, r);
  out.branch = out.dichotomy.branch;
  if (!out.dichotomy.certified()) {
    out.s_target = sizes.front();
    out.t_min = std::max<std::size_t>(options.target_t.value_or(out.s_target), 1);
    out.failure = out.dichotomy.failure;
    return out;
  }
  for (std::size_t s : sizes) {
    out.s_target = s;
    out.t_min = std::max<std::size_t>(options.target_t.value_or(s), 1);
    if (out.dichotomy.branch == Branch::kMindeg) {
      if (run_mindeg(g, r, c, s, out.t_min, options, out)) return out;
      // The density condition may hold as well; it gives a second route.
      if (out.dichotomy.dense_holds && run_dense(g, r, s, out.t_min, options, out)) return out;
    } else {
      if (run_dense(g, r, s, out.t_min, options, out)) return out;
    }
  }
  out.branch = out.dichotomy.branch;
  return out;
}

InvertedResult turan_inverted_fixed(const Graph& g, std::size_t r, const ExtractOptions& options) {
  if (r < 2) throw PreconditionError("turan_inverted_fixed: r must be >= 2");
  const double rd = static_cast<double>(r);
  const double c = std::pow(rd, -(rd + 7) * (rd + 1));
  const double ln_n = g.order() >= 2 ? std::log(static_cast<double>(g.order())) : 0.0;
  if (ln_n < 2 / c) {
    throw PreconditionError("turan_inverted_fixed: needs n >= e^(2/c) with c = r^(-(r+7)(r+1)); ln n = " +
                            std::to_string(ln_n) + " < " + std::to_string(2 / c));
  }
  ExtractOptions local = options;
  local.target_s.reset();
  return turan_inverted(g, r, c, local);
}

}  // namespace turanforge
