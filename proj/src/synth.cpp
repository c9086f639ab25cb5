#include "motionkey/synth.hpp"

#include <cmath>
#include <numbers>

#include "motionkey/errors.hpp"
#include "motionkey/rng.hpp"

namespace motionkey {

namespace {

constexpr double kLeadSeconds = 0.5;   // quiet segment before the bump
constexpr double kBumpSeconds = 0.05;  // tap transient
constexpr double kTailSeconds = 0.45;  // margin after the nominal shake
constexpr double kAmDepth = 0.3;

// Continuous-time description of one shaking process: quiet lead-in, a
// half-sine tap, then an amplitude-modulated oscillation whose frequency
// drifts linearly between two draws from base_freq_range. The oscillation
// is dominant along one axis; the other two carry scaled, phase-shifted
// copies so the trace stays genuinely three-dimensional.
struct Latent {
    double lead_end = 0.0;
    double bump_end = 0.0;
    double bump_amplitude = 0.0;
    double freq_start = 0.0;
    double freq_slope = 0.0;  // Hz per second
    double amplitude = 0.0;
    double am_freq = 0.0;
    double am_phase = 0.0;
    double carrier_phase = 0.0;
    int dominant_axis = 0;
    double cross_gain[2] = {0.0, 0.0};
    double cross_phase[2] = {0.0, 0.0};

    static Latent draw(const SynthConfig& config, Rng& rng) {
        Latent l;
        l.lead_end = kLeadSeconds;
        l.bump_end = kLeadSeconds + kBumpSeconds;
        l.bump_amplitude = config.bump_amplitude;

        const double f0 = rng.uniform(config.base_freq_range.lo, config.base_freq_range.hi);
        const double f1 = rng.uniform(config.base_freq_range.lo, config.base_freq_range.hi);
        const double drift_span = config.duration + kTailSeconds + 1.0;
        l.freq_start = f0;
        l.freq_slope = (f1 - f0) / drift_span;

        l.amplitude = rng.uniform(config.amp_range.lo, config.amp_range.hi);
        l.am_freq = rng.uniform(0.3, 1.0);
        l.am_phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        l.carrier_phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        l.dominant_axis = static_cast<int>(rng.uniform_int(0, 2));
        l.cross_gain[0] = rng.uniform(0.10, 0.25);
        l.cross_gain[1] = rng.uniform(0.05, 0.15);
        l.cross_phase[0] = rng.uniform(0.0, 2.0 * std::numbers::pi);
        l.cross_phase[1] = rng.uniform(0.0, 2.0 * std::numbers::pi);
        return l;
    }

    void eval(double t, double out[3]) const {
        out[0] = out[1] = out[2] = 0.0;
        if (t < lead_end) {
            return;
        }
        if (t < bump_end) {
            out[dominant_axis] =
                bump_amplitude * std::sin(std::numbers::pi * (t - lead_end) / kBumpSeconds);
            return;
        }
        const double tau = t - bump_end;
        // Integrated phase of the linearly drifting carrier.
        const double phase =
            2.0 * std::numbers::pi * (freq_start * tau + 0.5 * freq_slope * tau * tau) +
            carrier_phase;
        const double envelope =
            amplitude * (1.0 + kAmDepth * std::sin(2.0 * std::numbers::pi * am_freq * tau + am_phase));
        const int second = (dominant_axis + 1) % 3;
        const int third = (dominant_axis + 2) % 3;
        out[dominant_axis] = envelope * std::sin(phase);
        out[second] = cross_gain[0] * envelope * std::sin(phase + cross_phase[0]);
        out[third] = cross_gain[1] * envelope * std::sin(phase + cross_phase[1]);
    }
};

AccelTrace render_device(const SynthConfig& config, const Latent& latent, Rng& rng) {
    const double period = 1.0 / config.sample_rate;
    const auto count = static_cast<std::size_t>(std::llround(
        (kLeadSeconds + kBumpSeconds + config.duration + kTailSeconds) * config.sample_rate));

    const auto shift = rng.uniform_int(0, config.sync_offset_max);
    const double gain =
        rng.uniform(1.0 - config.device_gain_jitter, 1.0 + config.device_gain_jitter);

    std::vector<TriAxialSample> samples;
    samples.reserve(count);
    double axes[3];
    for (std::size_t n = 0; n < count; ++n) {
        latent.eval(static_cast<double>(n + shift) * period, axes);
        TriAxialSample s;
        s.t = static_cast<double>(n) * period;
        s.ax = gain * axes[0] + rng.gaussian(0.0, config.device_noise_std);
        s.ay = gain * axes[1] + rng.gaussian(0.0, config.device_noise_std);
        s.az = gain * axes[2] + rng.gaussian(0.0, config.device_noise_std);
        samples.push_back(s);
    }
    return AccelTrace(config.sample_rate, std::move(samples));
}

void require_interval(const Interval& iv, const char* name) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi || iv.lo < 0.0) {
        throw InvalidConfig(std::string(name) + " must be a non-empty non-negative interval");
    }
}

}  // namespace

void SynthConfig::validate() const {
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw InvalidConfig("duration must be positive");
    }
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
        throw InvalidConfig("sample_rate must be positive");
    }
    require_interval(base_freq_range, "base_freq_range");
    require_interval(amp_range, "amp_range");
    if (!(device_noise_std >= 0.0) || !std::isfinite(device_noise_std)) {
        throw InvalidConfig("device_noise_std must be non-negative");
    }
    if (!(device_gain_jitter >= 0.0) || !std::isfinite(device_gain_jitter)) {
        throw InvalidConfig("device_gain_jitter must be non-negative");
    }
    if (!(bump_amplitude >= 0.0) || !std::isfinite(bump_amplitude)) {
        throw InvalidConfig("bump_amplitude must be non-negative");
    }
}

std::pair<AccelTrace, AccelTrace> synth_shared_pair(const SynthConfig& config, std::uint64_t seed) {
    config.validate();
    Rng latent_rng(derive_seed(seed, 0));
    const Latent latent = Latent::draw(config, latent_rng);
    Rng device1_rng(derive_seed(seed, 1));
    Rng device2_rng(derive_seed(seed, 2));
    AccelTrace first = render_device(config, latent, device1_rng);
    AccelTrace second = render_device(config, latent, device2_rng);
    return {std::move(first), std::move(second)};
}

std::pair<AccelTrace, AccelTrace> synth_independent_pair(const SynthConfig& config,
                                                         std::uint64_t seed) {
    config.validate();
    Rng latent1_rng(derive_seed(seed, 10));
    Rng latent2_rng(derive_seed(seed, 11));
    const Latent latent1 = Latent::draw(config, latent1_rng);
    const Latent latent2 = Latent::draw(config, latent2_rng);
    Rng device1_rng(derive_seed(seed, 1));
    Rng device2_rng(derive_seed(seed, 2));
    AccelTrace first = render_device(config, latent1, device1_rng);
    AccelTrace second = render_device(config, latent2, device2_rng);
    return {std::move(first), std::move(second)};
}

}  // namespace motionkey
