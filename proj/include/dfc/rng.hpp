#pragma once

#include <cstdint>

namespace dfc {

/// splitmix64 step; used to expand seeds into xoshiro state.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// xoshiro256** (Blackman/Vigna). Fixed constants, no platform-dependent
/// behavior: every coefficient drawn through this generator is reproducible
/// bit-for-bit across builds and machines.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) noexcept {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1), 53 mantissa bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double uniform_symmetric() noexcept { return 2.0 * uniform() - 1.0; }

    /// Standard normal via Box-Muller (explicit formula, no cached spare).
    double normal() noexcept;

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

/// Deterministic substream derivation: stream i of a run is independent of
/// how many draws earlier streams consumed, so prefixes of a sampling run are
/// stable under increasing the sample count.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t s = seed ^ (0xD1342543DE82EF95ull * (stream + 1));
    return splitmix64(s);
}

} // namespace dfc
