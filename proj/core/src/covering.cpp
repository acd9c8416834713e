#include "turanforge/covering.hpp"

#include "turanforge/bipartite.hpp"
#include "turanforge/oracle.hpp"

#include <numeric>
#include <set>

namespace turanforge {

Graph covered_pairs_graph(const CliqueSet& m) {
  std::vector<Edge> pairs;
  for (const Clique& c : m) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) pairs.emplace_back(c[i], c[j]);
    }
  }
  return Graph(m.host_order(), pairs);
}

bool covers(const CliqueSet& m, const std::vector<VertexSet>& parts) {
  std::set<Edge> pairs;
  for (const Clique& c : m) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) pairs.insert(canonical({c[i], c[j]}));
    }
  }
  std::set<Vertex> seen;
  for (const auto& p : parts) {
    for (Vertex v : p) {
      if (!seen.insert(v).second) return false;
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (Vertex x : parts[i]) {
        for (Vertex y : parts[j]) {
          if (!pairs.contains(canonical({x, y}))) return false;
        }
      }
    }
  }
  return true;
}

namespace {

void check_shape(const Graph& g, const CliqueSet& m, const CoveringShape& shape) {
  if (m.empty()) throw PreconditionError("covered_multipartite: M is empty");
  if (m.host_order() != g.order()) throw PreconditionError("covered_multipartite: M belongs to a different graph");
  for (std::size_t s : shape.sizes) {
    if (s == 0) throw PreconditionError("covered_multipartite: part sizes must be >= 1");
  }
  if (shape.last_min == 0) throw PreconditionError("covered_multipartite: t_min must be >= 1");
}

std::optional<std::vector<VertexSet>> greedy(const Graph& gm, const Bits& support, const CoveringShape& shape) {
  std::vector<VertexSet> parts;
  Bits pool = support;
  for (std::size_t s : shape.sizes) {
    std::vector<Vertex> list;
    for (auto v = pool.find_first(); v != Bits::npos; v = pool.find_next(v)) list.push_back(static_cast<Vertex>(v));
    if (list.size() < s) return std::nullopt;
    std::vector<Bits> rows;
    rows.reserve(list.size());
    for (Vertex v : list) rows.push_back(gm.neighbors(v) & pool);
    const BipartiteGraph f(gm.order(), std::move(rows));
    const KstSearchResult best = kst_search(f, s);
    std::vector<Vertex> chosen;
    for (Vertex i : best.witness.s) chosen.push_back(list[i]);
    parts.push_back(VertexSet::from_sorted(std::move(chosen)));
    pool = to_bits(best.witness.t, gm.order());
  }
  if (pool.count() < shape.last_min) return std::nullopt;
  parts.push_back(to_vertex_set(pool));
  return parts;
}

struct OutOfBudget {};

class Backtracker {
 public:
  Backtracker(const Graph& gm, const CoveringShape& shape, std::uint64_t budget,
              const std::function<bool(const std::vector<VertexSet>&)>& visit)
      : gm_(gm), shape_(shape), budget_(budget), visit_(visit), parts_(shape.sizes.size()) {
    demand_.assign(shape.sizes.size() + 1, shape.last_min);
    for (std::size_t j = shape.sizes.size(); j-- > 0;) demand_[j] = demand_[j + 1] + shape.sizes[j];
  }

  // Returns false once the visitor asked to stop.
  bool run(const Bits& support) { return part(0, support, support); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool part(std::size_t j, const Bits& pool, const Bits& future) {
    if (++nodes_ > budget_) throw OutOfBudget{};
    if (j == shape_.sizes.size()) {
      if (pool.count() < shape_.last_min) return true;
      std::vector<VertexSet> family;
      for (const auto& p : parts_) family.push_back(VertexSet::from_sorted(p));
      family.push_back(to_vertex_set(pool));
      return visit_(family);
    }
    auto& chosen = parts_[j];
    if (chosen.size() == shape_.sizes[j]) return part(j + 1, future, future);
    std::size_t start = chosen.empty() ? 0 : chosen.back() + 1;
    if (chosen.empty() && j > 0 && shape_.sizes[j] == shape_.sizes[j - 1]) {
      start = std::max<std::size_t>(start, parts_[j - 1].front() + 1);
    }
    for (auto v = start == 0 ? pool.find_first() : pool.find_next(start - 1); v != Bits::npos; v = pool.find_next(v)) {
      Bits next_future = future & gm_.neighbors(static_cast<Vertex>(v));
      if (next_future.count() < demand_[j + 1]) continue;
      chosen.push_back(static_cast<Vertex>(v));
      Bits next_pool = pool;
      next_pool.reset(v);
      const bool go_on = part(j, next_pool, next_future);
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& gm_;
  const CoveringShape& shape_;
  std::uint64_t budget_;
  const std::function<bool(const std::vector<VertexSet>&)>& visit_;
  std::vector<std::vector<Vertex>> parts_;
  std::vector<std::size_t> demand_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t for_each_covered_multipartite(const Graph& g, const CliqueSet& m, const CoveringShape& shape,
                                            const std::function<bool(const std::vector<VertexSet>&)>& visit,
                                            const CoveringOptions& options) {
  check_shape(g, m, shape);
  const Graph gm = covered_pairs_graph(m);
  const Bits support = to_bits(m.support(), g.order());
  if (auto first = greedy(gm, support, shape)) {
    if (!visit(*first)) return 0;
  }
  Backtracker bt(gm, shape, options.node_budget, visit);
  try {
    bt.run(support);
  } catch (const OutOfBudget&) {
  }
  return bt.nodes();
}

CoveringResult covered_multipartite(const Graph& g, const CliqueSet& m, const CoveringShape& shape,
                                    const CoveringOptions& options) {
  check_shape(g, m, shape);
  const Graph gm = covered_pairs_graph(m);
  const Bits support = to_bits(m.support(), g.order());
  CoveringResult result;

  auto accept = [&](std::vector<VertexSet> parts, const char* strategy) {
    if (!covers(m, parts)) throw InternalFault(std::string("covered_multipartite: ") + strategy + " produced an uncovered family");
    result.parts = std::move(parts);
    result.strategy = strategy;
  };

  if (auto parts = greedy(gm, support, shape)) {
    accept(std::move(*parts), "greedy");
    return result;
  }
  std::optional<std::vector<VertexSet>> found;
  std::function<bool(const std::vector<VertexSet>&)> take_first = [&](const std::vector<VertexSet>& family) {
    found = family;
    return false;
  };
  Backtracker bt(gm, shape, options.node_budget, take_first);
  try {
    bt.run(support);
  } catch (const OutOfBudget&) {
    result.exhausted = true;
  }
  result.nodes = bt.nodes();
  if (found) {
    accept(std::move(*found), "backtracking");
    return result;
  }
  result.failure = result.exhausted ? "not found at requested size (covering search budget exhausted)"
                                    : "not found at requested size (no covered multipartite subgraph)";
  return result;
}

CoveringResult covered_multipartite(const Graph& g, const CliqueSet& m, std::size_t s, std::size_t t_min,
                                    const CoveringOptions& options) {
  if (s == 0) throw PreconditionError("covered_multipartite: s must be >= 1");
  if (m.clique_size() == 0) throw PreconditionError("covered_multipartite: M must hold cliques of size >= 1");
  return covered_multipartite(g, m, CoveringShape{std::vector<std::size_t>(m.clique_size() - 1, s), t_min}, options);
}

KrPlusWitness assemble_krplus(const Graph& g, const std::vector<VertexSet>& parts, std::optional<std::size_t> first_size) {
  if (parts.size() < 3) throw PreconditionError("assemble_krplus: need r+1 >= 3 parts");
  for (const auto& p : parts) {
    if (p.empty()) throw PreconditionError("assemble_krplus: empty part");
    if (p.bound() > g.order()) throw PreconditionError("assemble_krplus: vertex out of range");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (Vertex x : parts[i]) {
        for (Vertex y : parts[j]) {
          if (x == y || !g.adjacent(x, y)) throw PreconditionError("assemble_krplus: parts are not pairwise complete");
        }
      }
    }
  }
  const std::size_t f = first_size.value_or(std::max<std::size_t>(parts[0].size(), 2));
  if (f < 2) throw PreconditionError("assemble_krplus: first part must have size >= 2");
  if (f - 1 > parts[0].size()) throw PreconditionError("assemble_krplus: first part of K_{r+1} too small for requested size");

  KrPlusWitness w;
  std::vector<Vertex> first(parts[0].begin(), parts[0].begin() + static_cast<std::ptrdiff_t>(f - 1));
  first.push_back(parts[1][0]);
  w.parts.emplace_back(std::move(first));
  w.parts.insert(w.parts.end(), parts.begin() + 2, parts.end());
  w.extra_edge = canonical({parts[0][0], parts[1][0]});
  if (const VerifyResult check = verify_krplus(g, w); !check) {
    throw InternalFault("assemble_krplus: produced an invalid witness: " + check.diagnostic);
  }
  return w;
}

}  // namespace turanforge
