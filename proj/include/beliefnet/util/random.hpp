#pragma once

#include <cstdint>
#include <random>

namespace beliefnet {

using Rng = std::mt19937_64;

// SplitMix64 finalizer; derives independent sub-seeds from (seed, stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Uniform double in [0, 1) from the top 53 bits. Unlike the standard
// distributions, the result does not depend on the standard library.
double uniform01(Rng& rng);

// Uniform integer in [0, n) by rejection; n > 0.
std::uint64_t uniform_index(Rng& rng, std::uint64_t n);

// Seed from the system entropy source.
std::uint64_t entropy_seed();

}  // namespace beliefnet
