#pragma once

#include "core/ideal.hpp"
#include "core/matrix.hpp"
#include "core/rng.hpp"
#include "core/words.hpp"

namespace exgl {

// Rejection sampling of invertible matrices with uniform entries; the stream
// is a pure function of the seed. Throws errc::sampling when the acceptance
// rate is too low to reach `count` within `max_attempts_per_sample * count`
// candidate draws.
std::vector<InvertibleMatrix> sample_gl(const RingPtr& ring, std::uint32_t n, std::uint64_t seed,
                                        std::uint32_t count,
                                        std::uint32_t max_attempts_per_sample = 1000);

// Samples of the full congruence subgroup of level I: e + kappa with kappa
// drawn entrywise from I, rejecting the non-invertible ones.
std::vector<InvertibleMatrix> sample_congruence(const RingPtr& ring, std::uint32_t n,
                                                const Ideal& I, std::uint64_t seed,
                                                std::uint32_t count,
                                                std::uint32_t max_attempts_per_sample = 1000);

// A random word of `length` letters with nonzero entries.
GroupWord sample_elementary_word(const RingPtr& ring, std::uint32_t n, SplitMix64& rng,
                                 std::uint32_t length);

}  // namespace exgl
