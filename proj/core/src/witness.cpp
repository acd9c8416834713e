#include "turanforge/witness.hpp"

#include <algorithm>

namespace turanforge {

std::vector<std::size_t> KrPlusWitness::part_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(p.size());
  return out;
}

std::size_t KrPlusWitness::balanced_part_size() const {
  if (parts.size() <= 2) return parts.empty() ? 0 : parts.front().size();
  std::size_t best = parts[1].size();
  for (std::size_t i = 1; i + 1 < parts.size(); ++i) best = std::min(best, parts[i].size());
  return best;
}

KrPlusWitness KrPlusWitness::mapped(const std::vector<Vertex>& to_host) const {
  KrPlusWitness out;
  for (const auto& p : parts) {
    std::vector<Vertex> vs;
    for (Vertex v : p) vs.push_back(to_host.at(v));
    out.parts.emplace_back(std::move(vs));
  }
  out.extra_edge = canonical({to_host.at(extra_edge.first), to_host.at(extra_edge.second)});
  return out;
}

KrPlusWitness with_maximal_last_part(const Graph& g, const KrPlusWitness& w) {
  if (w.parts.empty()) return w;
  Bits pool = g.all_vertices();
  for (std::size_t i = 0; i + 1 < w.parts.size(); ++i) {
    for (Vertex v : w.parts[i]) pool &= g.neighbors(v);
  }
  KrPlusWitness out = w;
  out.parts.back() = to_vertex_set(pool);
  return out;
}

}  // namespace turanforge
