#include "turanforge/generators.hpp"

#include "turanforge/random.hpp"

#include <numeric>
#include <string>

namespace turanforge {

std::size_t PartSpec::order() const { return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}); }

void PartSpec::validate() const {
  if (sizes.empty()) throw PreconditionError("PartSpec: at least one part required");
  for (std::size_t s : sizes) {
    if (s == 0) throw PreconditionError("PartSpec: part sizes must be positive");
  }
  if (plus_edge && sizes[0] < 2) throw PreconditionError("PartSpec: plus_edge requires first part size >= 2");
}

static void check_turan_args(std::size_t r, std::size_t n) {
  if (r == 0 || r > n) {
    throw PreconditionError("turan: need 1 <= r <= n (got r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")");
  }
}

std::vector<std::size_t> turan_part_sizes(std::size_t r, std::size_t n) {
  check_turan_args(r, n);
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

std::uint64_t turan_edge_count(std::size_t r, std::size_t n) {
  std::uint64_t internal = 0;
  for (std::size_t s : turan_part_sizes(r, n)) internal += static_cast<std::uint64_t>(s) * (s - 1) / 2;
  return static_cast<std::uint64_t>(n) * (n - 1) / 2 - internal;
}

Graph complete_multipartite(const PartSpec& spec) {
  spec.validate();
  const std::size_t n = spec.order();
  std::vector<std::size_t> part(n);
  for (std::size_t i = 0, v = 0; i < spec.sizes.size(); ++i) {
    for (std::size_t k = 0; k < spec.sizes[i]; ++k) part[v++] = i;
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part[u] != part[v]) edges.emplace_back(u, v);
    }
  }
  if (spec.plus_edge) edges.emplace_back(0, 1);
  return Graph(n, edges);
}

Graph turan_graph(std::size_t r, std::size_t n) { return complete_multipartite(PartSpec{turan_part_sizes(r, n), false}); }

Graph turan_plus_edge(std::size_t r, std::size_t n) {
  const auto sizes = turan_part_sizes(r, n);
  if (sizes[0] < 2) throw PreconditionError("turan_plus_edge: need n > r so the first part has two vertices");
  return complete_multipartite(PartSpec{sizes, true});
}

Graph random_graph_with_edges(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
  if (m > pairs) {
    throw PreconditionError("random_graph_with_edges: m=" + std::to_string(m) + " exceeds n(n-1)/2=" + std::to_string(pairs));
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  std::uint64_t seen = 0;
  for (Vertex u = 0; u < n && edges.size() < m; ++u) {
    for (Vertex v = u + 1; v < n && edges.size() < m; ++v, ++seen) {
      const std::uint64_t needed = m - edges.size();
      if (uniform_below(rng, pairs - seen) < needed) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace turanforge
