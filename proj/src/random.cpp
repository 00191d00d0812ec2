#include "permstat/random.hpp"

#include <bit>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
    // xoshiro256** requires a nonzero state; splitmix64 cannot emit four
    // consecutive zeros, so this is unreachable, but guard anyway.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t RandomSource::next_u64() {
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
}

std::uint64_t RandomSource::uniform_below_u64(std::uint64_t n) {
    if (n == 0) throw DomainError("domain", "uniform_below_u64 requires n >= 1");
    if (n == 1) return 0;
    const int bits = 64 - std::countl_zero(n - 1);
    const std::uint64_t mask = (bits == 64) ? ~0ULL : ((1ULL << bits) - 1);
    std::uint64_t value;
    do {
        value = next_u64() & mask;
    } while (value >= n);
    return value;
}

BigInt RandomSource::uniform_below(const BigInt& n) {
    if (n <= 0) throw DomainError("domain", "uniform_below requires n >= 1");
    if (n == 1) return 0;
    const BigInt limit = n - 1;
    const std::size_t bits = boost::multiprecision::msb(limit) + 1;
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask = (top_bits == 64) ? ~0ULL : ((1ULL << top_bits) - 1);
    BigInt value;
    do {
        value = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = next_u64();
            if (w + 1 == words) word &= top_mask;
            value |= BigInt(word) << (64 * w);
        }
    } while (value >= n);
    return value;
}

RandomSource RandomSource::derive(std::uint64_t stream_index) const {
    std::uint64_t sm = seed_ ^ (0xA0761D6478BD642FULL + stream_index);
    const std::uint64_t derived = splitmix64(sm) ^ splitmix64(sm);
    return RandomSource(derived);
}

} // namespace permstat
