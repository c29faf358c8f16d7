#pragma once

#include <cstdint>
#include <string>

namespace latpath {

/// xorshift64* with the multiplier 0x2545F4914F6CDD1D: shifts 12/25/27, then
/// a 64-bit multiply. Fixed here so corpora reproduce bit-for-bit anywhere;
/// a zero seed is remapped to a fixed odd constant (the state must not be 0).
struct Xorshift64Star {
    std::uint64_t state;

    explicit Xorshift64Star(std::uint64_t seed)
        : state(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        std::uint64_t x = state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform in [0, bound) by modulo; bias is irrelevant at desk scale but
    /// the reduction is part of the documented stream contract.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Uniform integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

/// FNV-1a, used to derive per-instance substreams from string ids.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace latpath
