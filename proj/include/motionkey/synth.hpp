#pragma once

#include <cstdint>
#include <utility>

#include "motionkey/signal.hpp"

namespace motionkey {

/// Closed interval [lo, hi]; lo == hi is a valid degenerate range.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Parameters of the synthetic shake generator. A generated recording is
/// laid out as quiet lead-in, a short high-amplitude bump transient, then
/// `duration` seconds of oscillation plus a tail margin that absorbs the
/// per-device synchronization offset and the post-bump skip.
struct SynthConfig {
    double duration = 5.0;                 // seconds of usable shake
    double sample_rate = 100.0;            // Hz
    Interval base_freq_range{2.0, 5.0};    // Hz, shake oscillation
    Interval amp_range{5.0, 15.0};         // m/s^2
    double device_noise_std = 0.5;         // m/s^2, per axis
    double device_gain_jitter = 0.05;      // gain drawn in [1-j, 1+j]
    std::uint64_t sync_offset_max = 3;     // samples
    double bump_amplitude = 40.0;          // m/s^2

    /// Throws InvalidConfig when a field is out of range.
    void validate() const;
};

/// Renders one shared latent oscillation twice, once per device. Each
/// rendering gets an independent gain, independent per-axis Gaussian noise
/// and an independent integer start offset in [0, sync_offset_max]. The
/// bump transient is part of the shared latent, so both devices record it.
/// Deterministic for fixed (config, seed).
std::pair<AccelTrace, AccelTrace> synth_shared_pair(const SynthConfig& config, std::uint64_t seed);

/// Two renderings of two independently drawn latent oscillations; models
/// devices shaken separately. Deterministic for fixed (config, seed).
std::pair<AccelTrace, AccelTrace> synth_independent_pair(const SynthConfig& config, std::uint64_t seed);

}  // namespace motionkey
