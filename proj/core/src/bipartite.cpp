#include "turanforge/bipartite.hpp"

#include "turanforge/generators.hpp"
#include "turanforge/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace turanforge {

BipartiteGraph::BipartiteGraph(std::size_t size_a, std::size_t size_b) : size_b_(size_b), rows_(size_a, Bits(size_b)) {}

BipartiteGraph::BipartiteGraph(std::size_t size_a, std::size_t size_b, const std::vector<Edge>& edges)
    : BipartiteGraph(size_a, size_b) {
  for (const auto& [a, b] : edges) {
    if (a >= size_a || b >= size_b) throw PreconditionError("bipartite edge out of range");
    rows_[a].set(b);
  }
}

BipartiteGraph::BipartiteGraph(std::size_t size_b, std::vector<Bits> rows) : size_b_(size_b), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != size_b_) throw PreconditionError("bipartite row width mismatch");
  }
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.count();
  return total;
}

Bits BipartiteGraph::common_neighbors(const VertexSet& s) const {
  Bits acc(size_b_);
  acc.set();
  for (Vertex a : s) {
    if (a >= size_a()) throw PreconditionError("bipartite side-A vertex out of range");
    acc &= rows_[a];
  }
  return acc;
}

BipartiteGraph BipartiteGraph::random(std::size_t size_a, std::size_t size_b, std::uint64_t edges, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(size_a) * size_b;
  if (edges > pairs) throw PreconditionError("BipartiteGraph::random: too many edges");
  Rng rng(seed);
  BipartiteGraph f(size_a, size_b);
  std::uint64_t seen = 0;
  std::uint64_t placed = 0;
  for (Vertex a = 0; a < size_a; ++a) {
    for (Vertex b = 0; b < size_b; ++b, ++seen) {
      if (uniform_below(rng, pairs - seen) < edges - placed) {
        f.rows_[a].set(b);
        ++placed;
      }
    }
  }
  return f;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > static_cast<long double>(cap)) return cap == std::numeric_limits<std::uint64_t>::max() ? cap : cap + 1;
  }
  return static_cast<std::uint64_t>(std::llround(acc));
}

namespace {

struct Best {
  std::vector<Vertex> s;
  std::size_t t = 0;
  bool found = false;

  void offer(const std::vector<Vertex>& candidate, std::size_t value) {
    std::vector<Vertex> sorted = candidate;
    std::sort(sorted.begin(), sorted.end());
    if (!found || value > t || (value == t && sorted < s)) {
      s = std::move(sorted);
      t = value;
      found = true;
    }
  }
};

// Depth-first over increasing s-subsets of `pool`; a branch is cut once its
// running intersection cannot strictly beat the incumbent.
void exact_search(const BipartiteGraph& f, const std::vector<Vertex>& pool, std::size_t s, std::size_t start,
                  std::vector<Vertex>& chosen, const Bits& inter, Best& best) {
  if (chosen.size() == s) {
    const std::size_t t = inter.count();
    if (!best.found || t > best.t) {
      best.s = chosen;
      best.t = t;
      best.found = true;
    }
    return;
  }
  const std::size_t need = s - chosen.size();
  for (std::size_t i = start; i + need <= pool.size(); ++i) {
    Bits next = inter & f.row(pool[i]);
    if (best.found && next.count() <= best.t) continue;
    chosen.push_back(pool[i]);
    exact_search(f, pool, s, i + 1, chosen, next, best);
    chosen.pop_back();
  }
}

Best exact_over(const BipartiteGraph& f, std::vector<Vertex> pool, std::size_t s) {
  std::sort(pool.begin(), pool.end());
  Best best;
  std::vector<Vertex> chosen;
  Bits all(f.size_b());
  all.set();
  exact_search(f, pool, s, 0, chosen, all, best);
  if (!best.found && pool.size() >= s) {
    // Every branch was cut at zero; the first s vertices realize t = 0.
    best.s.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s));
    best.t = f.common_neighbors(VertexSet::from_sorted(best.s)).count();
    best.found = true;
  }
  return best;
}

std::vector<Vertex> by_degree(const BipartiteGraph& f) {
  std::vector<Vertex> order(f.size_a());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return f.degree_a(a) > f.degree_a(b); });
  return order;
}

}  // namespace

KstSearchResult kst_search(const BipartiteGraph& f, std::size_t s, const KstSearchOptions& options) {
  const std::size_t m = f.size_a();
  if (s > m) throw PreconditionError("kst_search: s=" + std::to_string(s) + " exceeds |A|=" + std::to_string(m));
  std::vector<Vertex> all(m);
  std::iota(all.begin(), all.end(), Vertex{0});

  auto finish = [&](const Best& best, bool exact) {
    VertexSet chosen = VertexSet::from_sorted(best.s);
    Bits t = f.common_neighbors(chosen);
    return KstSearchResult{KstWitness{chosen, to_vertex_set(t)}, exact};
  };

  if (binomial_capped(m, s, options.exact_budget) <= options.exact_budget) {
    return finish(exact_over(f, all, s), true);
  }

  Best best;
  const std::vector<Vertex> ranked = by_degree(f);

  // Greedy chain from the highest-degree vertex.
  {
    std::vector<Vertex> chosen{ranked.front()};
    Bits inter = f.row(ranked.front());
    std::vector<bool> used(m, false);
    used[ranked.front()] = true;
    while (chosen.size() < s) {
      Vertex pick = 0;
      std::size_t pick_value = 0;
      bool have = false;
      for (Vertex a = 0; a < m; ++a) {
        if (used[a]) continue;
        const std::size_t value = (inter & f.row(a)).count();
        if (!have || value > pick_value) {
          pick = a;
          pick_value = value;
          have = true;
        }
      }
      used[pick] = true;
      chosen.push_back(pick);
      inter &= f.row(pick);
    }
    best.offer(chosen, inter.count());
  }

  // Exact pass over the top 2s vertices by degree.
  {
    std::vector<Vertex> top(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(std::min(m, 2 * s)));
    const Best local = exact_over(f, top, s);
    if (local.found) best.offer(local.s, local.t);
  }

  // Degree-biased restarts: weight(a) = deg(a) + 1, sampled without replacement.
  Rng rng(options.seed);
  for (std::size_t round = 0; round < options.random_restarts; ++round) {
    std::vector<std::uint64_t> weight(m);
    std::uint64_t total = 0;
    for (Vertex a = 0; a < m; ++a) total += (weight[a] = f.degree_a(a) + 1);
    std::vector<Vertex> chosen;
    Bits inter(f.size_b());
    inter.set();
    while (chosen.size() < s) {
      std::uint64_t x = uniform_below(rng, total);
      Vertex a = 0;
      while (x >= weight[a]) x -= weight[a++];
      chosen.push_back(a);
      inter &= f.row(a);
      total -= weight[a];
      weight[a] = 0;
    }
    best.offer(chosen, inter.count());
  }
  return finish(best, false);
}

bool beats_kst_bound(std::size_t t, std::size_t n, const Rational& alpha, std::size_t s) {
  const Rational half_alpha = alpha / 2;
  Rational bound = n;
  for (std::size_t i = 0; i < s; ++i) bound *= half_alpha;
  return Rational(t) > bound;
}

BigInt kst_bound_floor_plus_one(std::size_t n, const Rational& alpha, std::size_t s) {
  Rational bound = n;
  for (std::size_t i = 0; i < s; ++i) bound *= alpha / 2;
  const BigInt floor_value = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
  return floor_value + 1;
}

std::vector<std::size_t> log_part_sizes(double c, std::size_t n) {
  if (!(c > 0) || n < 2) return {};
  const double x = c * std::log(static_cast<double>(n));
  const double k = std::round(x);
  std::vector<std::size_t> out;
  if (std::fabs(x - k) < 1e-9) {
    if (k >= 1) out.push_back(static_cast<std::size_t>(k));
    if (k >= 2) out.push_back(static_cast<std::size_t>(k) - 1);
  } else if (x >= 1) {
    out.push_back(static_cast<std::size_t>(std::floor(x)));
  }
  return out;
}

KstResult bipartite_kst(const BipartiteGraph& f, const Rational& alpha, double c, const KstSearchOptions& options) {
  const std::size_t m = f.size_a();
  const std::size_t n = f.size_b();
  if (alpha <= 0 || alpha > 1) throw PreconditionError("bipartite_kst: alpha must lie in (0, 1]");
  if (!(c > 0)) throw PreconditionError("bipartite_kst: c must be positive");
  if (n < 2) throw PreconditionError("bipartite_kst: need |B| >= 2 so that ln n > 0");
  const double cln = c * std::log(static_cast<double>(n));
  const double upper = to_double(alpha) * static_cast<double>(m) / 2 + 1;
  constexpr double slack = 1e-9;
  if (cln < 1 - slack) throw PreconditionError("bipartite_kst: precondition 1 <= c ln n fails (c ln n = " + std::to_string(cln) + ")");
  if (cln > upper + slack) {
    throw PreconditionError("bipartite_kst: precondition c ln n <= alpha*m/2 + 1 fails (" + std::to_string(cln) + " > " + std::to_string(upper) + ")");
  }
  if (Rational(f.edge_count()) < alpha * m * n) throw PreconditionError("bipartite_kst: precondition e(F) >= alpha*m*n fails");

  KstResult result;
  result.failure = "no admissible part size s = floor(c ln n)";
  for (std::size_t s : log_part_sizes(c, n)) {
    if (s > m || Rational(s) > alpha * m / 2 + 1) continue;
    const KstSearchResult found = kst_search(f, s, options);
    result.s = s;
    result.exact = found.exact;
    if (beats_kst_bound(found.witness.t.size(), n, alpha, s)) {
      result.witness = found.witness;
      return result;
    }
    if (found.exact) {
      throw InternalFault("bipartite_kst: exact optimum t=" + std::to_string(found.witness.t.size()) + " misses the bound n(alpha/2)^s");
    }
    result.failure = "randomized search did not reach n(alpha/2)^s";
  }
  return result;
}

}  // namespace turanforge
