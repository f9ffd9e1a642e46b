#pragma once

#include <cstdint>

namespace rephom {

// SplitMix64. Used for all sampling; per-sample streams are derived from
// (seed, index) so results do not depend on scheduling or thread count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Derive an independent stream for sample #i.
    static SplitMix64 for_sample(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

} // namespace rephom
