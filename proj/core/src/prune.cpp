#include "turanforge/prune.hpp"

#include "turanforge/random.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace turanforge {

std::size_t PruneResult::removed_count() const {
  std::size_t total = 0;
  for (const auto& step : log) total += step.eliminated;
  return total;
}

namespace {

// Largest integer cap with count <= theta <=> count <= cap, for counts >= 0.
long long codegree_cap(const Rational& theta) {
  if (theta < 0) return -1;
  const BigInt floor_value = boost::multiprecision::numerator(theta) / boost::multiprecision::denominator(theta);
  const BigInt limit = std::numeric_limits<long long>::max();
  return floor_value > limit ? std::numeric_limits<long long>::max() : floor_value.convert_to<long long>();
}

}  // namespace

PruneResult prune_min_codegree(const CliqueSet& x, const Rational& theta, const PruneOrder& order) {
  const std::size_t r = x.clique_size();
  if (r < 2) throw PreconditionError("prune_min_codegree: clique size must be >= 2");
  const long long cap = codegree_cap(theta);

  // Keys are the distinct (r-1)-subcliques, numbered in lexicographic order.
  std::map<Clique, std::size_t> key_index;
  for (const auto& member : x) {
    for (std::size_t i = 0; i < r; ++i) key_index.emplace(member.without_index(i), 0);
  }
  std::vector<Clique> keys;
  keys.reserve(key_index.size());
  for (auto& [key, id] : key_index) {
    id = keys.size();
    keys.push_back(key);
  }

  std::vector<std::vector<std::size_t>> members_of(keys.size());
  std::vector<std::vector<std::size_t>> keys_of(x.size(), std::vector<std::size_t>(r));
  for (std::size_t m = 0; m < x.size(); ++m) {
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t k = key_index.at(x[m].without_index(i));
      keys_of[m][i] = k;
      members_of[k].push_back(m);
    }
  }

  std::vector<std::size_t> rank(keys.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  if (order.shuffle_seed) {
    Rng rng(*order.shuffle_seed);
    for (std::size_t i = rank.size(); i > 1; --i) std::swap(rank[i - 1], rank[uniform_below(rng, i)]);
  }

  std::vector<long long> live(keys.size());
  std::set<std::pair<std::size_t, std::size_t>> eligible;  // (rank, key)
  auto refresh = [&](std::size_t k) {
    const bool is_eligible = live[k] > 0 && live[k] <= cap;
    if (is_eligible) {
      eligible.emplace(rank[k], k);
    } else {
      eligible.erase({rank[k], k});
    }
  };
  for (std::size_t k = 0; k < keys.size(); ++k) {
    live[k] = static_cast<long long>(members_of[k].size());
    refresh(k);
  }

  std::vector<bool> alive(x.size(), true);
  PruneResult result;
  result.input_shadow_size = keys.size();
  while (!eligible.empty()) {
    const std::size_t k = eligible.begin()->second;
    std::size_t eliminated = 0;
    for (std::size_t m : members_of[k]) {
      if (!alive[m]) continue;
      alive[m] = false;
      ++eliminated;
      for (std::size_t other : keys_of[m]) {
        --live[other];
        refresh(other);
      }
    }
    result.log.push_back(PruneStep{keys[k], eliminated});
  }
  result.kept = x.filtered([&](std::size_t i, const Clique&) { return alive[i]; });
  return result;
}

std::string check_prune_result(const CliqueSet& x, const Rational& theta, const PruneResult& result) {
  const CliqueSet& y = result.kept;
  if (y.clique_size() != x.clique_size()) return "kept set has the wrong clique size";
  for (const auto& c : y) {
    if (!x.contains(c)) return "kept member " + to_string(c.vertices()) + " is not in the input";
  }
  std::map<Clique, std::size_t> degree;
  for (const auto& c : y) {
    for (std::size_t i = 0; i < c.size(); ++i) ++degree[c.without_index(i)];
  }
  for (const auto& [key, d] : degree) {
    if (Rational(d) <= theta) return "survivor subclique " + to_string(key.vertices()) + " has codegree " + std::to_string(d) + " <= theta";
  }
  for (const auto& step : result.log) {
    if (step.eliminated == 0) return "logged step removed nothing";
    if (Rational(step.eliminated) > theta) return "logged step eliminated more than theta members";
  }
  if (result.removed_count() != x.size() - y.size()) return "removal log does not account for |X| - |Y|";
  const std::size_t shadow_size = shadow(x, x.clique_size() - 1).size();
  if (shadow_size != result.input_shadow_size) return "reported |K_{r-1}(X)| is wrong";
  if (Rational(x.size() - y.size()) > Rational(shadow_size) * theta) return "deletion bound |X|-|Y| <= |K_{r-1}(X)|*theta violated";
  if (result.log.size() > shadow_size) return "more removal steps than (r-1)-subcliques";
  return {};
}

}  // namespace turanforge
