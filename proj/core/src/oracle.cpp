#include "turanforge/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>

namespace turanforge {

std::uint64_t default_node_budget() {
  constexpr std::uint64_t kDefault = 10'000'000;
  if (const char* env = std::getenv("TURANFORGE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefault;
}

VerifyResult verify_krplus(const Graph& g, const KrPlusWitness& w) {
  auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
  if (w.parts.empty()) return fail("no parts");
  if (w.parts[0].size() < 2) return fail("first part too small");
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    if (w.parts[i].empty()) return fail("part " + std::to_string(i + 1) + " is empty");
    if (w.parts[i].bound() > g.order()) return fail("vertex out of range in part " + std::to_string(i + 1));
  }
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    for (Vertex v : w.parts[i]) {
      if (owner[v] != -1) return fail("parts not disjoint: vertex " + std::to_string(v));
      owner[v] = static_cast<int>(i);
    }
  }
  const auto [a, b] = w.extra_edge;
  if (a == b || !w.parts[0].contains(a) || !w.parts[0].contains(b)) return fail("extra edge not inside first part");
  if (!g.adjacent(a, b)) return fail("extra edge missing from graph");
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < w.parts.size(); ++j) {
      for (Vertex x : w.parts[i]) {
        for (Vertex y : w.parts[j]) {
          if (!g.adjacent(x, y)) return fail("missing cross edge " + std::to_string(x) + "-" + std::to_string(y));
        }
      }
    }
  }
  return VerifyResult{true, {}};
}

MaxKst max_kst(const BipartiteGraph& f, std::size_t s) {
  const std::size_t m = f.size_a();
  if (s > m) throw PreconditionError("max_kst: s=" + std::to_string(s) + " exceeds |A|=" + std::to_string(m));
  std::vector<Vertex> idx(s);
  std::iota(idx.begin(), idx.end(), Vertex{0});
  MaxKst best;
  bool have = false;
  for (;;) {
    std::size_t t = 0;
    for (Vertex b = 0; b < f.size_b(); ++b) {
      bool all = true;
      for (Vertex a : idx) all = all && f.adjacent(a, b);
      t += all ? 1 : 0;
    }
    if (!have || t > best.t) {
      best.t = t;
      best.s = VertexSet::from_sorted(idx);
      have = true;
    }
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == m - s + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kNone:
      return "none";
    case SearchStatus::kIndeterminate:
      return "indeterminate";
  }
  return "?";
}

namespace {

struct BudgetExhausted {};

class KrPlusSearcher {
 public:
  KrPlusSearcher(const Graph& g, std::vector<std::size_t> sizes, std::uint64_t budget)
      : g_(g), sizes_(std::move(sizes)), budget_(budget), parts_(sizes_.size()) {}

  // Fills parts[1..] given a completed part 0 and the vertices adjacent to all of it.
  bool fill_rest(const Bits& pool) { return fill(1, pool, pool); }

  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted{};
  }

  std::uint64_t nodes() const { return nodes_; }
  std::vector<std::vector<Vertex>>& parts() { return parts_; }
  std::size_t demand_from(std::size_t j) const {
    return std::accumulate(sizes_.begin() + static_cast<std::ptrdiff_t>(j), sizes_.end(), std::size_t{0});
  }

 private:
  // `pool`: vertices adjacent to every vertex of parts < j.
  // `future`: pool further restricted to neighbors of the vertices already in part j.
  bool fill(std::size_t j, const Bits& pool, const Bits& future) {
    tick();
    if (j == sizes_.size()) return true;
    auto& part = parts_[j];
    if (part.size() == sizes_[j]) {
      return fill(j + 1, future, future);
    }
    if (j + 1 == sizes_.size()) {
      // Last part: no constraint inside it, take the smallest vertices.
      if (pool.count() < sizes_[j]) return false;
      for (auto v = pool.find_first(); part.size() < sizes_[j]; v = pool.find_next(v)) part.push_back(static_cast<Vertex>(v));
      return true;
    }
    const std::size_t rest_demand = demand_from(j + 1);
    const std::size_t need_here = sizes_[j] - part.size();
    std::size_t start = part.empty() ? 0 : part.back() + 1;
    if (part.empty() && j >= 2 && sizes_[j] == sizes_[j - 1]) start = parts_[j - 1].front() + 1;
    for (auto v = start == 0 ? pool.find_first() : pool.find_next(start - 1); v != Bits::npos; v = pool.find_next(v)) {
      Bits next_future = future & g_.neighbors(static_cast<Vertex>(v));
      if (next_future.count() < rest_demand) continue;
      // Remaining candidates for this part must suffice.
      std::size_t remaining = 0;
      for (auto w = pool.find_next(v); w != Bits::npos && remaining + 1 < need_here; w = pool.find_next(w)) ++remaining;
      if (remaining + 1 < need_here) break;
      part.push_back(static_cast<Vertex>(v));
      Bits next_pool = pool;
      next_pool.reset(v);
      if (fill(j, next_pool, next_future)) return true;
      part.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::size_t> sizes_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<Vertex>> parts_;
};

Bits first_from(const Bits& b, std::size_t start) {
  Bits out = b;
  for (auto v = out.find_first(); v != Bits::npos && v < start; v = out.find_next(v)) out.reset(v);
  return out;
}

}  // namespace

KrPlusSearch find_krplus_exact(const Graph& g, const PartSpec& spec, std::uint64_t node_budget) {
  spec.validate();
  const std::size_t r = spec.sizes.size();

  // Search order: part 1 first, then the rest by decreasing size.
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin() + 1, order.end(), [&](std::size_t a, std::size_t b) { return spec.sizes[a] > spec.sizes[b]; });
  std::vector<std::size_t> sizes(r);
  for (std::size_t i = 0; i < r; ++i) sizes[i] = spec.sizes[order[i]];

  KrPlusSearch result;
  if (spec.order() > g.order()) {
    result.status = SearchStatus::kNone;
    return result;
  }

  KrPlusSearcher searcher(g, sizes, node_budget);
  const std::size_t demand_rest = searcher.demand_from(1);
  auto& parts = searcher.parts();

  // Part 1 = seed vertices + (s_1 - |seed|) more, in increasing order.
  std::function<bool(const Bits&, std::size_t)> grow_first = [&](const Bits& pool, std::size_t next_min) -> bool {
    searcher.tick();
    auto& first = parts[0];
    if (first.size() == sizes[0]) return searcher.fill_rest(pool);
    const std::size_t need = sizes[0] - first.size();
    Bits candidates = first_from(g.all_vertices(), next_min);
    for (Vertex v : first) candidates.reset(v);
    if (candidates.count() < need) return false;
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      Bits next_pool = pool & g.neighbors(static_cast<Vertex>(v));
      if (next_pool.count() < demand_rest) continue;
      first.push_back(static_cast<Vertex>(v));
      if (grow_first(next_pool, v + 1)) return true;
      first.pop_back();
    }
    return false;
  };

  bool found = false;
  try {
    if (spec.plus_edge) {
      for (const auto& [u, v] : g.edges()) {
        Bits pool = g.neighbors(u) & g.neighbors(v);
        if (pool.count() < demand_rest) continue;
        parts[0] = {u, v};
        for (std::size_t i = 1; i < r; ++i) parts[i].clear();
        if (grow_first(pool, 0)) {
          found = true;
          break;
        }
      }
    } else {
      for (auto& p : parts) p.clear();
      found = grow_first(g.all_vertices(), 0);
    }
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::kIndeterminate;
    result.nodes = searcher.nodes();
    return result;
  }
  result.nodes = searcher.nodes();
  if (!found) {
    result.status = SearchStatus::kNone;
    return result;
  }
  KrPlusWitness w;
  w.parts.resize(r);
  for (std::size_t i = 0; i < r; ++i) w.parts[order[i]] = VertexSet(parts[i]);
  if (spec.plus_edge) {
    w.extra_edge = canonical({parts[0][0], parts[0][1]});
  } else {
    // Without a requested extra edge, report any edge inside part 1 if present.
    w.extra_edge = {0, 0};
    for (std::size_t i = 0; i < parts[0].size(); ++i) {
      for (std::size_t j = i + 1; j < parts[0].size(); ++j) {
        if (g.adjacent(parts[0][i], parts[0][j])) w.extra_edge = canonical({parts[0][i], parts[0][j]});
      }
    }
  }
  result.status = SearchStatus::kFound;
  result.witness = std::move(w);
  return result;
}

MaxBalanced max_balanced_krplus(const Graph& g, std::size_t r, std::uint64_t node_budget) {
  if (r < 2) throw PreconditionError("max_balanced_krplus: r must be >= 2");
  MaxBalanced out;
  std::vector<std::size_t> base(r, 1);
  base[0] = 2;
  const KrPlusSearch base_probe = find_krplus_exact(g, PartSpec{base, true}, node_budget);
  if (base_probe.status == SearchStatus::kIndeterminate) {
    out.status = SearchStatus::kIndeterminate;
    return out;
  }
  out.base_shape_found = base_probe.status == SearchStatus::kFound;
  if (!out.base_shape_found) return out;
  for (std::size_t s = 2; s * r <= g.order(); ++s) {
    const KrPlusSearch probe = find_krplus_exact(g, PartSpec{std::vector<std::size_t>(r, s), true}, node_budget);
    if (probe.status == SearchStatus::kIndeterminate) {
      out.status = SearchStatus::kIndeterminate;
      return out;
    }
    if (probe.status == SearchStatus::kNone) break;
    out.s = s;
  }
  return out;
}

Frontier krplus_frontier(const Graph& g, std::size_t r, std::size_t first, std::size_t s, std::uint64_t node_budget) {
  if (r < 2) throw PreconditionError("krplus_frontier: r must be >= 2");
  Frontier out;
  for (std::size_t t = 1; first + (r - 2) * s + t <= g.order(); ++t) {
    std::vector<std::size_t> sizes(r, s);
    sizes[0] = first;
    sizes[r - 1] = t;
    const KrPlusSearch probe = find_krplus_exact(g, PartSpec{sizes, true}, node_budget);
    if (probe.status == SearchStatus::kIndeterminate) {
      out.status = SearchStatus::kIndeterminate;
      return out;
    }
    if (probe.status == SearchStatus::kNone) break;
    out.t = t;
  }
  return out;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, std::size_t r) {
  if (coloring.size() != g.order()) return false;
  for (int c : coloring) {
    if (c < 0 || static_cast<std::size_t>(c) >= r) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (coloring[u] == coloring[v]) return false;
  }
  return true;
}

std::optional<std::vector<int>> is_r_partite(const Graph& g, std::size_t r) {
  if (r == 0) throw PreconditionError("is_r_partite: r must be >= 1");
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);

  // Most-constrained-first: pick the uncolored vertex seeing the most
  // distinct colors, ties by degree then index.
  std::function<bool(std::size_t, int)> solve = [&](std::size_t colored, int used) -> bool {
    if (colored == n) return true;
    Vertex pick = 0;
    int pick_sat = -1;
    std::size_t pick_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      std::vector<bool> seen(r, false);
      int sat = 0;
      const Bits& nb = g.neighbors(v);
      for (auto w = nb.find_first(); w != Bits::npos; w = nb.find_next(w)) {
        if (color[w] != -1 && !seen[color[w]]) {
          seen[color[w]] = true;
          ++sat;
        }
      }
      const std::size_t deg = g.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    const int limit = std::min<int>(static_cast<int>(r), used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      const Bits& nb = g.neighbors(pick);
      for (auto w = nb.find_first(); w != Bits::npos && !clash; w = nb.find_next(w)) clash = color[w] == c;
      if (clash) continue;
      color[pick] = c;
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      color[pick] = -1;
    }
    return false;
  };

  if (!solve(0, 0)) return std::nullopt;
  if (!is_proper_coloring(g, color, r)) throw InternalFault("is_r_partite: produced an improper coloring");
  return color;
}

}  // namespace turanforge
