#include "turanforge/dichotomy.hpp"

#include "turanforge/generators.hpp"

namespace turanforge {

const char* to_string(Branch b) { return b == Branch::kDense ? "DENSE" : "MINDEG"; }

bool dense_condition(const Graph& g, std::size_t r) {
  if (r < 2) throw PreconditionError("dense_condition: r must be >= 2");
  const BigInt rr(r);
  const Rational coeff = Rational(rr - 1, 2 * rr) + Rational(BigInt(1), rr * rr * rr * rr * (rr * rr - 1));
  const BigInt n(g.order());
  return Rational(BigInt(g.edge_count())) > coeff * n * n;
}

bool mindeg_condition(const Graph& g, std::size_t r) {
  if (r < 2) throw PreconditionError("mindeg_condition: r must be >= 2");
  if (g.order() == 0) return false;
  const BigInt r4 = BigInt(r) * r * r * r;
  if (BigInt(g.min_degree()) * r4 <= (r4 - BigInt(r) * r * r - 1) * g.order()) return false;
  return find_clique(g, r + 1).has_value();
}

DichotomyOutcome dichotomy_subgraph(const Graph& g, std::size_t r) {
  if (r < 2) throw PreconditionError("dichotomy_subgraph: r must be >= 2");
  const std::size_t n = g.order();
  if (g.edge_count() <= turan_edge_count(r, n)) {
    throw PreconditionError("dichotomy_subgraph: edge count " + std::to_string(g.edge_count()) + " <= t_r(n) = " +
                            std::to_string(turan_edge_count(r, n)));
  }
  const BigInt r2 = BigInt(r) * r;
  const BigInt r4 = r2 * r2;

  DichotomyOutcome out;
  std::vector<Vertex> alive(n);
  for (Vertex v = 0; v < n; ++v) alive[v] = v;
  out.sub = induced_subgraph(g, VertexSet::from_sorted(alive));

  for (;;) {
    const Graph& h = out.sub.graph;
    out.edges = h.edge_count();
    out.min_degree = h.min_degree();
    out.mindeg_holds = mindeg_condition(h, r);
    out.dense_holds = dense_condition(h, r);
    if (out.mindeg_holds) {
      out.branch = Branch::kMindeg;
      out.clique = find_clique(h, r + 1);
      return out;
    }
    if (out.dense_holds) {
      out.branch = Branch::kDense;
      return out;
    }
    const bool degree_ok = BigInt(out.min_degree) * r4 > (r4 - r2 - 1) * h.order();
    if (degree_ok) {
      out.failure = "dichotomy not certified: minimum degree condition holds but G' has no K_" + std::to_string(r + 1) +
                    " and the density condition fails";
      return out;
    }
    // Deleting one more vertex must keep n' > (1 - 1/r^2) n.
    if (BigInt(h.order() - 1) * r2 <= (r2 - 1) * n) {
      out.failure = "dichotomy not certified: order would drop to (1 - 1/r^2) n";
      return out;
    }
    const Vertex local = h.min_degree_vertex();
    out.deleted.push_back(out.sub.host_vertex(local));
    alive.erase(alive.begin() + local);
    out.sub = induced_subgraph(g, VertexSet::from_sorted(alive));
  }
}

}  // namespace turanforge
