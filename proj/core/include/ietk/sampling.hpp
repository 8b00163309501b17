#ifndef IETK_SAMPLING_HPP
#define IETK_SAMPLING_HPP

#include "ietk/iet.hpp"
#include "ietk/rng.hpp"

namespace ietk {

/// Uniform random rational IET: lengths k_i/Q from a uniform composition of
/// Q into d positive parts, permutation uniform among irreducible ones.
/// Deterministic in the seed.
Iet sample_random_iet(int d, long q, std::uint64_t seed);

/// Same, but drawing from a caller-owned stream (for sequences of trials).
Iet sample_random_iet(int d, long q, SplitMix64& rng);

/// Uniform irreducible permutation of {1..d}.
Permutation sample_irreducible_permutation(int d, SplitMix64& rng);

}  // namespace ietk

#endif
