#include "turanforge/stability.hpp"

#include "turanforge/generators.hpp"
#include "turanforge/oracle.hpp"

#include <cmath>

namespace turanforge {

namespace {

BigInt floor_of(const Rational& q) {
  return boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
}

BigInt ceil_of(const Rational& q) {
  const BigInt f = floor_of(q);
  return Rational(f) == q ? f : f + 1;
}

// k <= sqrt(2 alpha) n
bool within_eps(std::size_t k, std::size_t n, const Rational& alpha) {
  return Rational(BigInt(k) * k) <= 2 * alpha * BigInt(n) * BigInt(n);
}

// delta > (1 - 1/r - 2 sqrt(2 alpha)) n
bool degree_bound_holds(std::size_t delta, std::size_t n, std::size_t r, const Rational& alpha) {
  const Rational d = Rational(BigInt(n) * (r - 1), BigInt(r)) - Rational(BigInt(delta));
  if (d < 0) return true;
  return d * d < 8 * alpha * BigInt(n) * BigInt(n);
}

void check_alpha(std::size_t r, const Rational& alpha) {
  if (r < 2) throw PreconditionError("stability_decompose: r must be >= 2");
  if (alpha <= 0 || alpha >= Rational(BigInt(1), BigInt(r))) {
    throw PreconditionError("stability_decompose: alpha must lie in (0, 1/r)");
  }
}

}  // namespace

VertexSet low_degree_set(const Graph& g, std::size_t r, const Rational& alpha) {
  const std::size_t n = g.order();
  const Rational two_alpha_n2 = 2 * alpha * BigInt(n) * BigInt(n);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n; ++u) {
    const Rational d = Rational(BigInt(n) * (r - 1), BigInt(r)) - Rational(BigInt(g.degree(u)));
    if (d >= 0 && d * d >= two_alpha_n2) out.push_back(u);
  }
  return VertexSet::from_sorted(std::move(out));
}

std::string check_decomposition(const Graph& g, std::size_t r, const Rational& alpha, const VertexSet& removed,
                                const std::vector<int>& coloring) {
  const std::size_t n = g.order();
  if (removed.bound() > n) return "removed vertex out of range";
  const VertexSet kept = to_vertex_set(g.all_vertices()).minus(removed);
  const InducedSubgraph g0 = induced_subgraph(g, kept);
  if (!within_eps(removed.size(), n, alpha)) return "order bound |G_0| >= (1 - sqrt(2 alpha)) n fails";
  if (kept.empty()) return "G_0 is empty";
  if (!degree_bound_holds(g0.graph.min_degree(), n, r, alpha)) {
    return "minimum degree bound delta(G_0) > (1 - 1/r - 2 sqrt(2 alpha)) n fails";
  }
  if (coloring.size() != kept.size()) return "coloring length does not match |G_0|";
  if (!is_proper_coloring(g0.graph, coloring, r)) return "coloring is not a proper r-coloring of G_0";
  return {};
}

StabilityOutcome stability_decompose(const Graph& g, std::size_t r, double c, const Rational& alpha,
                                     const ExtractOptions& options) {
  check_alpha(r, alpha);
  const std::size_t n = g.order();
  const BigInt n2 = BigInt(n) * BigInt(n);
  const Rational need = (Rational(BigInt(r - 1), BigInt(r)) - alpha) * n2 / 2;
  if (Rational(BigInt(g.edge_count())) < need) {
    throw PreconditionError("stability_decompose: edge count " + std::to_string(g.edge_count()) +
                            " < ceil((1 - 1/r - alpha) n^2 / 2) = " + ceil_of(need).str());
  }
  const std::vector<std::size_t> sizes = requested_part_sizes(c, n, options);

  StabilityOutcome out;
  const BigInt r8 = boost::multiprecision::pow(BigInt(r), 8);
  out.alpha_in_theorem_regime = alpha * 8 * r8 < 1;
  out.theorem = theorem_targets(TargetKind::kStability, r, n, c, options);
  out.s_target = sizes.front();
  out.t_min = std::max<std::size_t>(options.target_t.value_or(out.s_target), 1);
  out.measures.n = n;
  out.measures.edges = g.edge_count();

  // (1) more than t_r(n) edges: the inverted Turan route.
  if (g.edge_count() > turan_edge_count(r, n)) {
    InvertedResult inv = turan_inverted(g, r, c, options);
    const bool found = inv.witness.has_value();
    if (found) {
      out.witness = inv.witness;
      out.witness_route = "turan";
    }
    out.inverted = std::move(inv);
    if (found) return out;
  }

  const VertexSet m_eps = low_degree_set(g, r, alpha);
  out.measures.removed = m_eps.size();

  // (2) many low-degree vertices: deleting floor(eps n) of them leaves more
  // than t_r edges.
  if (Rational(BigInt(m_eps.size()) * m_eps.size()) >= 2 * alpha * n2) {
    const BigInt k_big = boost::multiprecision::sqrt(floor_of(2 * alpha * n2));
    const std::size_t k = std::min<std::size_t>(k_big.convert_to<std::size_t>(), m_eps.size());
    if (k > 0 && k < n && m_eps.size() >= k) {
      const VertexSet drop = VertexSet::from_sorted(std::vector<Vertex>(m_eps.begin(), m_eps.begin() + static_cast<std::ptrdiff_t>(k)));
      const InducedSubgraph rest = induced_subgraph(g, to_vertex_set(g.all_vertices()).minus(drop));
      if (rest.graph.edge_count() > turan_edge_count(r, rest.graph.order())) {
        InvertedResult inv = turan_inverted(rest.graph, r, c, options);
        if (inv.witness) {
          out.witness = with_maximal_last_part(g, inv.witness->mapped(rest.to_host));
          out.witness_route = "removal";
          out.inverted = std::move(inv);
          return out;
        }
        out.inverted = std::move(inv);
      }
    }
  }

  const VertexSet kept = to_vertex_set(g.all_vertices()).minus(m_eps);
  InducedSubgraph g0 = induced_subgraph(g, kept);
  out.measures.g0_order = kept.size();
  out.measures.g0_min_degree = kept.empty() ? 0 : g0.graph.min_degree();

  // (3) G_0 with a K_{r+1} and large minimum degree: the minimum-degree
  // pipeline on G_0.
  if (!kept.empty() && mindeg_condition(g0.graph, r)) {
    ExtractOptions local = options;
    local.target_s = out.s_target;
    local.target_t = out.t_min;
    const MindegResult res = mindeg_krplus(g0.graph, r, c, local);
    out.trace = res.trace;
    if (res.witness) {
      KrPlusWitness w = with_maximal_last_part(g, res.witness->mapped(g0.to_host));
      if (w.last_part_size() >= out.t_min) {
        out.witness = std::move(w);
        out.witness_route = "g0-mindeg";
      }
    }
  }
  if (out.witness) {
    if (const VerifyResult check = verify_krplus(g, *out.witness); !check) {
      throw InternalFault("stability_decompose: witness is invalid: " + check.diagnostic);
    }
    return out;
  }

  out.measures.order_bound = within_eps(m_eps.size(), n, alpha);
  out.measures.degree_bound = !kept.empty() && degree_bound_holds(out.measures.g0_min_degree, n, r, alpha);
  std::optional<std::vector<int>> coloring;
  if (!kept.empty()) coloring = is_r_partite(g0.graph, r);
  out.measures.r_partite = coloring.has_value();

  if (out.measures.order_bound && out.measures.degree_bound && coloring) {
    if (std::string why = check_decomposition(g, r, alpha, m_eps, *coloring); !why.empty()) {
      throw InternalFault("stability_decompose: decomposition failed re-verification: " + why);
    }
    out.decomposition = Decomposition{m_eps, std::move(g0), std::move(*coloring)};
    return out;
  }
  out.failure = "stability not certified: n=" + std::to_string(n) + " e=" + std::to_string(g.edge_count()) +
                " |M_eps|=" + std::to_string(m_eps.size()) + " |G_0|=" + std::to_string(kept.size()) +
                " delta(G_0)=" + std::to_string(out.measures.g0_min_degree) +
                " order_bound=" + (out.measures.order_bound ? "yes" : "no") +
                " degree_bound=" + (out.measures.degree_bound ? "yes" : "no") +
                " r_partite=" + (out.measures.r_partite ? "yes" : "no");
  return out;
}

StabilityOutcome stability_decompose_fixed(const Graph& g, std::size_t r, const Rational& alpha,
                                           const ExtractOptions& options) {
  if (r < 2) throw PreconditionError("stability_decompose_fixed: r must be >= 2");
  const double rd = static_cast<double>(r);
  const double c = std::pow(rd, -(rd + 7) * (rd + 1)) / 2;
  const double ln_n = g.order() >= 2 ? std::log(static_cast<double>(g.order())) : 0.0;
  if (ln_n < 2 / c) {
    throw PreconditionError("stability_decompose_fixed: needs n >= e^(2/c) with c = r^(-(r+7)(r+1))/2; ln n = " +
                            std::to_string(ln_n) + " < " + std::to_string(2 / c));
  }
  ExtractOptions local = options;
  local.target_s.reset();
  return stability_decompose(g, r, c, alpha, local);
}

}  // namespace turanforge
