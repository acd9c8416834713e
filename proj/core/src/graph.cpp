#include "turanforge/graph.hpp"

#include <algorithm>
#include <string>

namespace turanforge {

VertexSet to_vertex_set(const Bits& b) {
  std::vector<Vertex> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<Vertex>(i));
  return VertexSet::from_sorted(std::move(out));
}

Bits to_bits(const VertexSet& s, std::size_t order) {
  Bits b(order);
  for (Vertex v : s) {
    if (v >= order) throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order));
    b.set(v);
  }
  return b;
}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : rows_(order, Bits(order)) {
  for (const auto& [u, v] : edges) {
    check_vertex(u, "edge endpoint");
    check_vertex(v, "edge endpoint");
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (!rows_[u].test(v)) {
      rows_[u].set(v);
      rows_[v].set(u);
      ++edge_count_;
    }
  }
}

void Graph::check_vertex(Vertex v, const char* what) const {
  if (v >= order()) {
    throw PreconditionError(std::string(what) + " " + std::to_string(v) + " out of range for order " + std::to_string(order()));
  }
}

std::size_t Graph::min_degree() const {
  if (rows_.empty()) return 0;
  std::size_t best = rows_[0].count();
  for (const auto& row : rows_) best = std::min(best, row.count());
  return best;
}

Vertex Graph::min_degree_vertex() const {
  if (rows_.empty()) throw PreconditionError("min_degree_vertex of empty graph");
  Vertex best = 0;
  std::size_t best_degree = rows_[0].count();
  for (Vertex v = 1; v < rows_.size(); ++v) {
    const std::size_t d = rows_[v].count();
    if (d < best_degree) {
      best = v;
      best_degree = d;
    }
  }
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < rows_.size(); ++u) {
    for (auto v = rows_[u].find_next(u); v != Bits::npos; v = rows_[u].find_next(v)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u, "edge endpoint");
  check_vertex(v, "edge endpoint");
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  if (!g.rows_[u].test(v)) {
    g.rows_[u].set(v);
    g.rows_[v].set(u);
    ++g.edge_count_;
  }
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u, "edge endpoint");
  check_vertex(v, "edge endpoint");
  Graph g = *this;
  if (u != v && g.rows_[u].test(v)) {
    g.rows_[u].reset(v);
    g.rows_[v].reset(u);
    --g.edge_count_;
  }
  return g;
}

Bits Graph::all_vertices() const {
  Bits b(order());
  b.set();
  return b;
}

VertexSet InducedSubgraph::to_host_set(const VertexSet& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_host.at(v));
  return VertexSet(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  if (subset.bound() > g.order()) {
    throw PreconditionError("induced_subgraph: vertex " + std::to_string(subset.bound() - 1) + " out of range");
  }
  const auto& members = subset.members();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.adjacent(members[i], members[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return InducedSubgraph{Graph(members.size(), edges), members};
}

Bits common_neighborhood_bits(const Graph& g, const VertexSet& r) {
  if (r.bound() > g.order()) throw PreconditionError("common_neighborhood: vertex out of range");
  Bits acc = g.all_vertices();
  for (Vertex u : r) acc &= g.neighbors(u);
  return acc;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& r) {
  return to_vertex_set(common_neighborhood_bits(g, r));
}

Graph permuted(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw PreconditionError("permuted: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

}  // namespace turanforge
