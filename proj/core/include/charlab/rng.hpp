#pragma once

#include <cstdint>
#include <string_view>

namespace charlab {

// splitmix64: tiny, fast, and reproducible across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) by rejection; independent of any stdlib distribution
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= lim);
        return v % n;
    }

    // uniform in [lo, hi] inclusive
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
};

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Every randomized task derives its own stream from the one global seed and a
// stable label, so results do not depend on thread scheduling or task order.
inline std::uint64_t derive_seed(std::uint64_t root_seed, std::string_view label) {
    SplitMix64 mix(root_seed ^ fnv1a64(label));
    return mix.next();
}

} // namespace charlab
