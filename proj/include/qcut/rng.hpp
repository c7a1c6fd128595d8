#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace qcut {

namespace detail {

// SplitMix64 finalizer; used to spread seeds before feeding the engine.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

// Seeded pseudo-random stream. A stream is fully identified by its 64-bit
// seed; child streams are derived by index, never by consumption state, so
// how much one stream is used cannot shift the draws of another.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed)
        : seed_(seed), engine_(detail::splitmix64(seed)) {}

    // Child stream for worker/iteration `index`, independent of this
    // stream's consumption state.
    RngStream derive(std::uint64_t index) const {
        return RngStream(detail::splitmix64(seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return engine_(); }

    // Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound); bound >= 1. Rejection sampling, no
    // modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

// Number of failures before the next success in a Bernoulli(q) slot scan,
// capped at `cap`. q == 1 selects every slot (gap 0).
inline std::uint64_t geometric_gap(RngStream& rng, double q, std::uint64_t cap) {
    if (q >= 1.0) return 0;
    const double u = rng.uniform01();
    const double g = std::floor(std::log1p(-u) / std::log1p(-q));
    if (!(g < static_cast<double>(cap))) return cap;
    return static_cast<std::uint64_t>(g);
}

} // namespace qcut
