#pragma once

#include "turanforge/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace turanforge {

/// A set of pairwise adjacent vertices.
class Clique {
 public:
  Clique() = default;
  /// Throws PreconditionError if two members are non-adjacent in `host`.
  Clique(const Graph& host, VertexSet vertices);
  /// No adjacency check; for callers that built the set from adjacency data.
  static Clique unchecked(VertexSet vertices);

  const VertexSet& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  /// True when every vertex of `sub` is a member.
  bool includes(const Clique& sub) const;
  /// This clique with its i-th member removed.
  Clique without_index(std::size_t i) const;

  friend bool operator==(const Clique&, const Clique&) = default;
  friend auto operator<=>(const Clique& a, const Clique& b) { return a.vertices_ <=> b.vertices_; }

 private:
  VertexSet vertices_;
};

/// Deduplicated, lexicographically sorted family of cliques of one size.
/// Members are validated against the host graph at construction; the set
/// keeps only the host's order afterwards.
class CliqueSet {
 public:
  CliqueSet() = default;
  CliqueSet(const Graph& host, std::size_t clique_size);
  CliqueSet(const Graph& host, std::size_t clique_size, std::vector<Clique> members);

  std::size_t host_order() const { return host_order_; }
  std::size_t clique_size() const { return clique_size_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Clique>& members() const { return members_; }
  const Clique& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const Clique& c) const;
  /// Number of members containing R; |R| must be clique_size() - 1.
  std::size_t codegree(const Clique& r) const;
  /// Union of the members' vertices.
  VertexSet support() const;
  /// Members i for which keep(i, member) holds, order preserved.
  CliqueSet filtered(const std::function<bool(std::size_t, const Clique&)>& keep) const;

  friend bool operator==(const CliqueSet& a, const CliqueSet& b) {
    return a.clique_size_ == b.clique_size_ && a.members_ == b.members_;
  }

 private:
  CliqueSet(std::size_t host_order, std::size_t clique_size, std::vector<Clique> sorted_members, int);
  friend CliqueSet shadow(const CliqueSet& m, std::size_t s);
  friend CliqueSet enumerate_cliques(const Graph& g, std::size_t r);

  std::size_t host_order_ = 0;
  std::size_t clique_size_ = 0;
  std::vector<Clique> members_;
};

/// Calls `visit` for every r-clique of G in lexicographic order. Returning
/// false from `visit` stops the traversal.
void for_each_clique(const Graph& g, std::size_t r, const std::function<bool(const Clique&)>& visit);

/// All r-cliques of G. r >= 1.
CliqueSet enumerate_cliques(const Graph& g, std::size_t r);

/// k_r(G) without materializing the cliques. r >= 1.
std::uint64_t count_cliques(const Graph& g, std::size_t r);

/// Number of k-cliques whose vertices all lie in `within`. k = 0 counts the
/// empty clique once.
std::uint64_t count_cliques_within(const Graph& g, const Bits& within, std::size_t k);

/// Lexicographically first r-clique, if any.
std::optional<Clique> find_clique(const Graph& g, std::size_t r);

/// An edge lying in the largest number of r-cliques.
struct JointReport {
  std::optional<Edge> edge;  // empty exactly when count == 0
  std::uint64_t count = 0;
};

/// js_r(G): the maximum number of r-cliques sharing one edge. Ties go to
/// the lexicographically lowest edge. r >= 2.
JointReport joint_size(const Graph& g, std::size_t r);

/// Number of r-cliques containing the edge uv (zero when uv is not an edge).
std::uint64_t cliques_on_edge(const Graph& g, Edge uv, std::size_t r);

/// K_s(M): every s-clique contained in some member of M. s <= M.clique_size().
CliqueSet shadow(const CliqueSet& m, std::size_t s);

/// Calls `visit` with every s-subset of `c`, in lexicographic order.
void for_each_subclique(const Clique& c, std::size_t s, const std::function<void(const Clique&)>& visit);

}  // namespace turanforge
