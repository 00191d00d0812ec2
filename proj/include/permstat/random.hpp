#pragma once

#include <array>
#include <cstdint>

#include "permstat/rational.hpp"

namespace permstat {

/// Deterministic, platform-independent PRNG: xoshiro256** with its state
/// expanded from the 64-bit seed by splitmix64. The same seed yields a
/// bit-identical draw sequence everywhere; the algorithm is part of the
/// interface and must not change silently.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64();

    /// Uniform in [0, n), n >= 1, via bit-masked rejection (no modulo bias).
    std::uint64_t uniform_below_u64(std::uint64_t n);

    /// Uniform in [0, n) for arbitrary-precision n >= 1. Draws ceil(bits/64)
    /// words per attempt, masks to the bit width of n-1, rejects if >= n.
    /// n == 1 returns 0 without consuming randomness.
    BigInt uniform_below(const BigInt& n);

    /// Independent stream for sharded work: reseeds with a splitmix64 hash
    /// of (seed, stream_index).
    RandomSource derive(std::uint64_t stream_index) const;

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_;
};

} // namespace permstat
