#pragma once

#include <cstdint>
#include <cmath>
#include <stdexcept>

namespace woagwo {

// SplitMix64 (Vigna, 2015). Pinned project-wide: every stochastic draw in the
// library comes from this generator so a run is exactly replayable from its
// seed on any platform. The reference sequence for seed 1234567 begins
// 6457827717110365317, 3203168211198807973, ... and is frozen in the tests.
inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

// One-shot SplitMix64 step on x: finalize(x + gamma). Also used as the hash
// for substream derivation and run addressing.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    std::uint64_t z = x + kSplitMixGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) noexcept : seed_(seed), state_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() noexcept {
        std::uint64_t out = mix64(state_);
        state_ += kSplitMixGamma;
        return out;
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi). Requires lo < hi, both finite.
    double uniform(double lo, double hi) {
        if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("RandomStream::uniform: invalid range");
        double v = lo + (hi - lo) * unit();
        if (v >= hi) v = std::nextafter(hi, lo); // rounding can touch hi
        return v;
    }

    // Child stream deterministic in (seed, index); does not consume parent state.
    RandomStream split(std::uint64_t index) const noexcept {
        return RandomStream(mix64(mix64(seed_) ^ index));
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

} // namespace woagwo
