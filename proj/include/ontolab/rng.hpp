#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ontolab {

// splitmix64 finalizer, used for seed derivation.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/**
 * Seeded RNG for reproducible experiments.
 *
 * Wraps std::mt19937_64 (whose raw output sequence is pinned by the
 * standard) and derives all variates from raw 64-bit draws, so results
 * do not depend on the standard library's distribution implementations.
 *
 * Substream rule: substream(i) reseeds with mix64(root_seed ^ mix64(i+1)).
 * Substreams depend only on (root seed, index), never on draws already
 * consumed, so sharded runs reduce identically at any parallelism level.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller; consumes two uniforms per call.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
    }

    Rng substream(std::uint64_t index) const {
        return Rng(mix64(seed_ ^ mix64(index + 1)));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace ontolab
