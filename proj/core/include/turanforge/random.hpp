#pragma once

#include <cstdint>
#include <random>

namespace turanforge {

/// All randomized code draws from this engine. std::mt19937_64 produces the
/// same stream on every conforming implementation; the standard
/// distributions do not, so bounded draws go through uniform_below.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// SplitMix64 finalizer, used to derive independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

}  // namespace turanforge
