#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace motionkey {

/// SplitMix64 finalizer; used to turn (seed, stream) pairs into well-mixed
/// engine seeds so that sub-generators are decorrelated.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return mix64(base ^ mix64(stream));
}

/// Deterministic random source. All distributions are implemented on top of
/// raw mt19937_64 output instead of <random> distribution objects, whose
/// algorithms are implementation-defined; identical seeds therefore produce
/// identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi]; returns lo exactly when lo == hi.
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform integer in [lo, hi], inclusive, via rejection sampling.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t range = hi - lo + 1;  // hi >= lo required
        if (range == 0) return engine_();         // full 64-bit span
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % range;
        std::uint64_t draw = engine_();
        while (draw >= limit) draw = engine_();
        return lo + draw % range;
    }

    /// Standard normal via Box-Muller; consumes two uniforms per call.
    double gaussian() {
        const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace motionkey
