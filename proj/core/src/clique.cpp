#include "turanforge/clique.hpp"

#include <algorithm>
#include <string>

namespace turanforge {

Clique::Clique(const Graph& host, VertexSet vertices) : vertices_(std::move(vertices)) {
  if (vertices_.bound() > host.order()) throw PreconditionError("clique vertex out of range");
  const auto& v = vertices_.members();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!host.adjacent(v[i], v[j])) {
        throw PreconditionError("not a clique: " + std::to_string(v[i]) + " and " + std::to_string(v[j]) + " are not adjacent");
      }
    }
  }
}

Clique Clique::unchecked(VertexSet vertices) {
  Clique c;
  c.vertices_ = std::move(vertices);
  return c;
}

bool Clique::includes(const Clique& sub) const {
  return std::includes(begin(), end(), sub.begin(), sub.end());
}

Clique Clique::without_index(std::size_t i) const {
  std::vector<Vertex> out;
  out.reserve(size() - 1);
  for (std::size_t k = 0; k < size(); ++k) {
    if (k != i) out.push_back(vertices_[k]);
  }
  return unchecked(VertexSet::from_sorted(std::move(out)));
}

CliqueSet::CliqueSet(const Graph& host, std::size_t clique_size) : host_order_(host.order()), clique_size_(clique_size) {}

CliqueSet::CliqueSet(const Graph& host, std::size_t clique_size, std::vector<Clique> members)
    : host_order_(host.order()), clique_size_(clique_size), members_(std::move(members)) {
  for (const auto& c : members_) {
    if (c.size() != clique_size_) {
      throw PreconditionError("CliqueSet: member of size " + std::to_string(c.size()) + " in a set of size " + std::to_string(clique_size_));
    }
    Clique(host, c.vertices());
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

CliqueSet::CliqueSet(std::size_t host_order, std::size_t clique_size, std::vector<Clique> sorted_members, int)
    : host_order_(host_order), clique_size_(clique_size), members_(std::move(sorted_members)) {}

bool CliqueSet::contains(const Clique& c) const {
  return std::binary_search(members_.begin(), members_.end(), c);
}

std::size_t CliqueSet::codegree(const Clique& r) const {
  if (r.size() + 1 != clique_size_) {
    throw PreconditionError("codegree: query of size " + std::to_string(r.size()) + " against clique size " + std::to_string(clique_size_));
  }
  return static_cast<std::size_t>(std::count_if(members_.begin(), members_.end(), [&](const Clique& c) { return c.includes(r); }));
}

VertexSet CliqueSet::support() const {
  std::vector<Vertex> all;
  for (const auto& c : members_) all.insert(all.end(), c.begin(), c.end());
  return VertexSet(std::move(all));
}

CliqueSet CliqueSet::filtered(const std::function<bool(std::size_t, const Clique&)>& keep) const {
  std::vector<Clique> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (keep(i, members_[i])) out.push_back(members_[i]);
  }
  return CliqueSet(host_order_, clique_size_, std::move(out), 0);
}

namespace {

// Depth-first extension in increasing vertex order; `candidates` holds the
// vertices after the last member that are adjacent to every member.
bool extend(const Graph& g, std::vector<Vertex>& prefix, const Bits& candidates, std::size_t remaining,
            const std::function<bool(const Clique&)>& visit) {
  if (remaining == 0) return visit(Clique::unchecked(VertexSet::from_sorted(prefix)));
  if (candidates.count() < remaining) return true;
  Bits rest = candidates;
  for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
    rest.reset(v);
    if (rest.count() + 1 < remaining) break;
    prefix.push_back(static_cast<Vertex>(v));
    const bool go_on = extend(g, prefix, rest & g.neighbors(static_cast<Vertex>(v)), remaining - 1, visit);
    prefix.pop_back();
    if (!go_on) return false;
  }
  return true;
}

std::uint64_t count_extend(const Graph& g, const Bits& candidates, std::size_t remaining) {
  if (remaining == 0) return 1;
  const std::size_t available = candidates.count();
  if (available < remaining) return 0;
  if (remaining == 1) return available;
  std::uint64_t total = 0;
  Bits rest = candidates;
  for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
    rest.reset(v);
    if (rest.count() + 1 < remaining) break;
    total += count_extend(g, rest & g.neighbors(static_cast<Vertex>(v)), remaining - 1);
  }
  return total;
}

void require_positive(std::size_t r, const char* op) {
  if (r == 0) throw PreconditionError(std::string(op) + ": clique size must be >= 1");
}

}  // namespace

void for_each_clique(const Graph& g, std::size_t r, const std::function<bool(const Clique&)>& visit) {
  require_positive(r, "for_each_clique");
  std::vector<Vertex> prefix;
  extend(g, prefix, g.all_vertices(), r, visit);
}

CliqueSet enumerate_cliques(const Graph& g, std::size_t r) {
  std::vector<Clique> out;
  for_each_clique(g, r, [&](const Clique& c) {
    out.push_back(c);
    return true;
  });
  return CliqueSet(g.order(), r, std::move(out), 0);
}

std::uint64_t count_cliques(const Graph& g, std::size_t r) {
  require_positive(r, "count_cliques");
  return count_extend(g, g.all_vertices(), r);
}

std::uint64_t count_cliques_within(const Graph& g, const Bits& within, std::size_t k) {
  return count_extend(g, within, k);
}

std::optional<Clique> find_clique(const Graph& g, std::size_t r) {
  std::optional<Clique> found;
  for_each_clique(g, r, [&](const Clique& c) {
    found = c;
    return false;
  });
  return found;
}

std::uint64_t cliques_on_edge(const Graph& g, Edge uv, std::size_t r) {
  if (r < 2) throw PreconditionError("cliques_on_edge: clique size must be >= 2");
  const auto [u, v] = uv;
  if (u >= g.order() || v >= g.order() || u == v || !g.adjacent(u, v)) return 0;
  return count_extend(g, g.neighbors(u) & g.neighbors(v), r - 2);
}

JointReport joint_size(const Graph& g, std::size_t r) {
  if (r < 2) throw PreconditionError("joint_size: clique size must be >= 2");
  JointReport best;
  for (const Edge& e : g.edges()) {
    const std::uint64_t count = cliques_on_edge(g, e, r);
    if (count > best.count) {
      best.count = count;
      best.edge = e;
    }
  }
  return best;
}

void for_each_subclique(const Clique& c, std::size_t s, const std::function<void(const Clique&)>& visit) {
  const std::size_t k = c.size();
  if (s > k) return;
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  for (;;) {
    std::vector<Vertex> sub(s);
    for (std::size_t i = 0; i < s; ++i) sub[i] = c[idx[i]];
    visit(Clique::unchecked(VertexSet::from_sorted(std::move(sub))));
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == k - s + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

CliqueSet shadow(const CliqueSet& m, std::size_t s) {
  if (s > m.clique_size()) {
    throw PreconditionError("shadow: size " + std::to_string(s) + " exceeds clique size " + std::to_string(m.clique_size()));
  }
  std::vector<Clique> out;
  for (const auto& c : m) for_each_subclique(c, s, [&](const Clique& sub) { out.push_back(sub); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return CliqueSet(m.host_order(), s, std::move(out), 0);
}

}  // namespace turanforge
