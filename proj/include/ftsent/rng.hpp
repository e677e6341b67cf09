#pragma once

#include <cstdint>

namespace ftsent {

/// splitmix64: tiny seeded generator with portable, platform-independent
/// output. All fuzz harnesses derive their streams from this so that a
/// seed fully determines every sampled operator.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit mantissa.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double uniform_pm1() { return 2.0 * uniform01() - 1.0; }
};

}  // namespace ftsent
