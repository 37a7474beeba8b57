#pragma once

// Seeded PRNG used by instance generation and verification sampling.
// splitmix64 is small, fast, and fully specified here, so identical seeds
// reproduce identical instances on any platform.

#include <cstdint>

namespace mcn {

struct SplitMix64 {
    uint64_t state = 0;

    constexpr explicit SplitMix64(uint64_t seed) : state(seed) {}

    constexpr uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound must be positive. The modulo bias is
    // negligible for the small bounds used here and keeps the sequence
    // trivially reproducible.
    constexpr uint64_t below(uint64_t bound) { return next() % bound; }

    // Uniform in [lo, hi] inclusive.
    constexpr long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // True with probability pct/100.
    constexpr bool chance(int pct) { return below(100) < static_cast<uint64_t>(pct); }
};

}  // namespace mcn
