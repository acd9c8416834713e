#include "turanforge/mindeg.hpp"

#include "turanforge/oracle.hpp"
#include "turanforge/prune.hpp"

#include <set>

namespace turanforge {

std::vector<std::size_t> requested_part_sizes(double c, std::size_t n, const ExtractOptions& options) {
  if (options.target_s) {
    if (*options.target_s == 0) throw PreconditionError("target s must be >= 1");
    return {*options.target_s};
  }
  if (!(c > 0)) throw PreconditionError("c must be positive");
  std::vector<std::size_t> sizes = log_part_sizes(c, n);
  if (sizes.empty()) throw PreconditionError("c ln n < 1, so the requested part size floor(c ln n) is 0");
  return sizes;
}

Rational default_theta(std::size_t n, std::size_t r) {
  const BigInt denom = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(r + 8));
  const Rational nominal(BigInt(n), denom);
  return nominal >= 1 ? nominal : Rational(1);
}

std::string mindeg_precondition_failure(const Graph& g, std::size_t r) {
  if (r < 2) return "r must be >= 2";
  if (!find_clique(g, r + 1)) return "G contains no K_" + std::to_string(r + 1);
  const BigInt r4 = BigInt(r) * r * r * r;
  const BigInt lhs = BigInt(g.min_degree()) * r4;
  const BigInt rhs = (r4 - BigInt(r) * r * r - 1) * g.order();
  if (lhs <= rhs) {
    return "minimum degree " + std::to_string(g.min_degree()) + " is not > (1 - 1/r - 1/r^4) n";
  }
  return {};
}

namespace {

std::size_t count_in(const Clique& c, const Bits& b) {
  std::size_t k = 0;
  for (Vertex v : c) k += b.test(v) ? 1 : 0;
  return k;
}

void check_stage_predicates(const Graph& g, std::size_t r, const ExtractionTrace& tr, const PruneResult& pruned) {
  const auto [u, v] = tr.pivot_edge;
  for (Vertex w = 0; w < g.order(); ++w) {
    if ((g.adjacent(u, w) && g.adjacent(v, w)) != tr.set_b.contains(w)) {
      throw InternalFault("mindeg_krplus: B is not the common neighborhood of the pivot edge");
    }
  }
  const Bits b = to_bits(tr.set_b, g.order());
  for (const Clique& c : tr.set_x) {
    if (count_in(c, b) + 1 < r) throw InternalFault("mindeg_krplus: member of X meets B in fewer than r-1 vertices");
  }
  for (const Clique& c : tr.set_y) {
    if (!tr.set_x.contains(c)) throw InternalFault("mindeg_krplus: Y is not a subset of X");
  }
  if (std::string why = check_prune_result(tr.set_x, tr.theta, pruned); !why.empty()) {
    throw InternalFault("mindeg_krplus: pruning post-condition failed: " + why);
  }
}

struct Attempt {
  std::optional<KrPlusWitness> witness;
  std::size_t final_t = 0;
};

// Stages after H is fixed: transversals, F, the K_{s,t} search, and the
// part swap that puts u, v into the first part.
Attempt finish_from_cover(const Graph& g, std::size_t s, std::size_t m, const std::vector<VertexSet>& h,
                          const ExtractOptions& options, ExtractionTrace& tr) {
  Attempt out;
  const auto [u, v] = tr.pivot_edge;
  const std::vector<Vertex>& b_list = tr.set_b.members();
  tr.covered_parts = h;
  tr.transversals.clear();
  std::vector<Bits> rows;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Vertex> members;
    for (const auto& part : h) members.push_back(part[i]);
    const Clique ri = Clique::unchecked(VertexSet(members));
    tr.transversals.push_back(ri);
    Bits row(b_list.size());
    for (std::size_t j = 0; j < b_list.size(); ++j) {
      if (ri.vertices().contains(b_list[j])) continue;
      if (tr.set_y.contains(Clique::unchecked(ri.vertices().united(VertexSet{b_list[j]})))) row.set(j);
    }
    rows.push_back(std::move(row));
  }
  const BipartiteGraph f(b_list.size(), std::move(rows));
  tr.f_edges = f.edge_count();
  tr.stage = "bipartite";
  if (s > m) return out;
  const KstSearchResult kst = kst_search(f, s, options.kst);

  tr.selected.clear();
  for (Vertex i : kst.witness.s) tr.selected.push_back(tr.transversals[i]);
  std::vector<Vertex> t_members;
  for (Vertex j : kst.witness.t) t_members.push_back(b_list[j]);
  tr.t_set = VertexSet::from_sorted(std::move(t_members));

  tr.star_parts.clear();
  for (const auto& part : h) {
    std::vector<Vertex> star;
    for (Vertex i : kst.witness.s) star.push_back(part[i]);
    tr.star_parts.emplace_back(std::move(star));
  }
  std::size_t outside = 0;
  tr.h1_index = 0;
  for (std::size_t j = 0; j < tr.star_parts.size(); ++j) {
    if (!tr.star_parts[j].minus(tr.set_b).empty()) {
      ++outside;
      tr.h1_index = j;
    }
  }
  if (outside >= 2) throw InternalFault("mindeg_krplus: two parts of H* leave B, contradicting Y subset of X");
  tr.stage = "assemble";

  const std::size_t first = std::max<std::size_t>(s, 2);
  std::vector<Vertex> h1 = {u, v};
  for (Vertex w : tr.star_parts[tr.h1_index]) {
    if (h1.size() == first) break;
    if (w != u && w != v) h1.push_back(w);
  }
  KrPlusWitness w;
  w.parts.emplace_back(std::move(h1));
  for (std::size_t j = 0; j < tr.star_parts.size(); ++j) {
    if (j != tr.h1_index) w.parts.push_back(tr.star_parts[j]);
  }
  w.parts.push_back(tr.t_set);
  w.extra_edge = canonical({u, v});
  w = with_maximal_last_part(g, w);
  if (const VerifyResult check = verify_krplus(g, w); !check) {
    throw InternalFault("mindeg_krplus: assembled witness is invalid: " + check.diagnostic);
  }
  out.final_t = w.last_part_size();
  out.witness = std::move(w);
  return out;
}

}  // namespace

MindegResult mindeg_krplus(const Graph& g, std::size_t r, double c, const ExtractOptions& options) {
  if (std::string why = mindeg_precondition_failure(g, r); !why.empty()) {
    throw PreconditionError("mindeg_krplus: " + why);
  }
  const std::size_t n = g.order();
  const std::vector<std::size_t> sizes = requested_part_sizes(c, n, options);

  MindegResult result;
  ExtractionTrace& tr = result.trace;

  const JointReport joint = joint_size(g, r + 1);
  if (!joint.edge) throw InternalFault("mindeg_krplus: K_{r+1} present but joint size is 0");
  tr.pivot_edge = *joint.edge;
  tr.pivot_joint = joint.count;
  tr.stage = "pivot";

  const Bits b = g.neighbors(tr.pivot_edge.first) & g.neighbors(tr.pivot_edge.second);
  tr.set_b = to_vertex_set(b);
  tr.set_x = enumerate_cliques(g, r).filtered([&](std::size_t, const Clique& c) { return count_in(c, b) + 1 >= r; });
  tr.stage = "X";

  if (options.theta) {
    if (*options.theta < 0) throw PreconditionError("mindeg_krplus: theta must be >= 0");
    tr.theta = *options.theta;
    tr.theta_source = "override";
  } else {
    tr.theta = default_theta(n, r);
    tr.theta_source = tr.theta == Rational(BigInt(n), boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(r + 8))) ? "theorem" : "floor";
  }
  const PruneResult pruned = prune_min_codegree(tr.set_x, tr.theta);
  tr.set_y = pruned.kept;
  tr.prune_steps = pruned.log.size();
  check_stage_predicates(g, r, tr, pruned);
  tr.stage = "Y";
  if (tr.set_y.empty()) {
    result.failure = "not found at requested size (Y is empty after pruning with theta = " + to_string(tr.theta) + ")";
    return result;
  }

  const CliqueSet shadow_y = shadow(tr.set_y, r - 1);
  std::optional<KrPlusWitness> best;
  for (std::size_t s : sizes) {
    const std::size_t t_min = std::max<std::size_t>(options.target_t.value_or(s), 1);
    for (std::size_t m : {2 * s, s}) {
      tr.s = s;
      tr.m = m;
      tr.stage = "cover";
      const CoveringShape shape{std::vector<std::size_t>(r - 2, m), m};
      std::set<std::vector<VertexSet>> seen;
      std::size_t tried = 0;
      bool done = false;
      for_each_covered_multipartite(
          g, shadow_y, shape,
          [&](const std::vector<VertexSet>& family) {
            std::vector<VertexSet> h = family;
            h.back() = VertexSet::from_sorted(std::vector<Vertex>(h.back().begin(), h.back().begin() + static_cast<std::ptrdiff_t>(m)));
            if (!seen.insert(h).second) return true;
            ++tried;
            ++tr.attempts;
            if (!covers(shadow_y, h)) throw InternalFault("mindeg_krplus: H is not covered by K_{r-1}(Y)");
            Attempt a = finish_from_cover(g, s, m, h, options, tr);
            if (a.witness && a.final_t >= t_min) {
              best = std::move(a.witness);
              done = true;
              return false;
            }
            return tried < options.covering_candidates;
          },
          options.covering);
      if (done) break;
    }
    if (best) break;
  }
  if (!best) {
    result.failure = "not found at requested size (stage " + tr.stage + ")";
    return result;
  }
  tr.stage = "done";
  result.witness = std::move(best);
  return result;
}

}  // namespace turanforge
