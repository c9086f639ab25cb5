#pragma once

#include <cstddef>

#include "motionkey/features.hpp"
#include "motionkey/keygen.hpp"
#include "motionkey/matching.hpp"
#include "motionkey/signal.hpp"

namespace motionkey {

/// Everything a device needs to turn its own trace into a key, plus the
/// confirmation rule. Both devices of a pairing must be provisioned with an
/// identical config; none of it is exchanged at pairing time.
struct PipelineConfig {
    unsigned nb = 4;                  // bits per feature
    std::size_t kernel_size = 5;      // box filter width; 1 = raw
    double bump_threshold = 30.0;     // m/s^2
    std::size_t skip = 20;            // samples dropped after the bump
    std::size_t trim_len = 500;       // samples kept for feature extraction
    FeatureBounds bounds;             // normalization ranges
    MatchMode mode = MatchMode::relaxed;
    double agree_fraction = 0.9;
};

/// The full per-device computation: norm, bump synchronization on the raw
/// norm signal, trim, box filter, feature extraction, normalization,
/// quantization. Propagates stage errors (NoBumpDetected,
/// InsufficientSamples, DegenerateSignal, ...).
Key derive_key(const AccelTrace& trace, const PipelineConfig& config);

/// The trimmed, filtered norm signal the features are computed from;
/// exposed for calibration and diagnostics.
NormSignal preprocess_trace(const AccelTrace& trace, const PipelineConfig& config);

}  // namespace motionkey
