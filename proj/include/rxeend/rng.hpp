#pragma once

#include <cmath>
#include <cstdint>

namespace rxeend {

// Deterministic 64-bit generator (splitmix64) with hand-rolled distributions.
// One word of state keeps checkpointing trivial, and avoiding the standard
// library distributions keeps every draw reproducible across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller. Two uniforms per draw, no cached
    // second value, so the generator state alone captures the stream.
    double normal() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Geometric run length >= 1 with the given mean; mean <= 1 collapses to 1.
    std::int64_t geometric(double mean_len) {
        if (mean_len <= 1.0) return 1;
        const double q = 1.0 / mean_len;
        double u;
        do {
            u = uniform();
        } while (u <= 0.0);
        const double len = 1.0 + std::floor(std::log(u) / std::log1p(-q));
        if (len > 1e9) return 1000000000;
        return static_cast<std::int64_t>(len);
    }

    // Independent stream keyed by `stream`; does not advance this generator.
    Rng fork(std::uint64_t stream) const {
        return Rng(state_ ^ (0xD1B54A32D192ED03ull * (stream + 1)));
    }

    std::uint64_t state() const { return state_; }
    void set_state(std::uint64_t s) { state_ = s; }

  private:
    static constexpr double kTwoPi = 6.283185307179586476925286766559;
    std::uint64_t state_;
};

}  // namespace rxeend
