#pragma once

#include "turanforge/clique.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace turanforge {

struct PruneStep {
  Clique removed;           // the (r-1)-clique R that triggered the removal
  std::size_t eliminated;   // members of Y that contained R at that moment
};

/// Order in which eligible (r-1)-cliques are processed. The default always
/// takes the lexicographically smallest eligible R; a shuffle seed replaces
/// the lexicographic rank with a seeded random one.
struct PruneOrder {
  std::optional<std::uint64_t> shuffle_seed;
};

struct PruneResult {
  CliqueSet kept;
  std::vector<PruneStep> log;
  /// |K_{r-1}(X)|, the number of distinct (r-1)-subcliques of the input.
  std::size_t input_shadow_size = 0;

  std::size_t removed_count() const;
};

/// Repeatedly picks an (r-1)-clique R contained in a surviving member with
/// at most `theta` surviving members containing it, and removes all of them.
/// Stops when every (r-1)-subclique of every survivor has codegree > theta.
/// Live codegree counters are kept per subclique, so each removal costs only
/// the members it deletes. Requires x.clique_size() >= 2.
PruneResult prune_min_codegree(const CliqueSet& x, const Rational& theta, const PruneOrder& order = {});

/// Post-condition and accounting checks for a pruning run:
/// every survivor's (r-1)-subcliques have codegree > theta in the survivors,
/// survivors are a subset of x, each logged step eliminated at most theta
/// members and step counts add up to |x| - |kept|, and
/// |x| - |kept| <= |K_{r-1}(x)| * theta. Returns an empty string when all
/// hold, otherwise a description of the first failure.
std::string check_prune_result(const CliqueSet& x, const Rational& theta, const PruneResult& result);

}  // namespace turanforge
