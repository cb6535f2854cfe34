#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace rwalk {

// All randomness flows through std::mt19937_64 plus the helpers below.
// The engine's output sequence is fixed by the standard, and the helpers
// avoid std::uniform_*_distribution, whose results vary between standard
// library implementations. Together that makes every simulation result
// reproducible from its 64-bit seed on any platform.
using Engine = std::mt19937_64;

/// splitmix64 finalizer; bijective on 64-bit values.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stable order-sensitive hash of an integer tuple. Used to derive
/// independent stream seeds from (base_seed, indices...).
constexpr std::uint64_t seed_hash(std::initializer_list<std::uint64_t> parts) noexcept {
    std::uint64_t h = 0x8f1bbcdcbfa53e0bULL;
    for (std::uint64_t p : parts) {
        h = mix64(h + 0x9e3779b97f4a7c15ULL + p);
    }
    return h;
}

inline Engine make_engine(std::uint64_t seed) { return Engine{seed}; }

/// Unbiased uniform draw from [0, bound). Requires bound >= 1.
/// Consumes no engine output when the result is forced (bound == 1).
inline std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (0ULL - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = eng();
        if (r >= threshold) return r % bound;
    }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace rwalk
