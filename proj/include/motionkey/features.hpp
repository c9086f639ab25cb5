#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>

#include "motionkey/preprocess.hpp"

namespace motionkey {

inline constexpr std::size_t kFeatureCount = 10;

/// Canonical feature order; every array-of-10 in the library follows it.
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "num_peaks", "rms",          "mean",         "variance",      "skewness",
    "kurtosis",  "crest_factor", "peak_to_peak", "autocorr_lag1", "avg_power",
};

/// The 10 time-domain features of a whole norm signal, in native units.
/// Moments are population moments; kurtosis is non-excess (m4 / sigma^4);
/// autocorr_lag1 is the normalized lag-1 autocorrelation coefficient.
struct FeatureVector {
    std::size_t num_peaks = 0;
    double rms = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    double crest_factor = 0.0;
    double peak_to_peak = 0.0;
    double autocorr_lag1 = 0.0;
    double avg_power = 0.0;

    std::array<double, kFeatureCount> as_array() const {
        return {static_cast<double>(num_peaks),
                rms,
                mean,
                variance,
                skewness,
                kurtosis,
                crest_factor,
                peak_to_peak,
                autocorr_lag1,
                avg_power};
    }
};

/// Feature vector mapped to [0,1]^10 by min-max normalization; order as in
/// kFeatureNames.
struct NormalizedFeatureVector {
    std::array<double, kFeatureCount> values{};
};

/// Per-feature normalization ranges in native units; hi > lo for every
/// feature. Defaults to the unit interval for all features.
struct FeatureBounds {
    struct Range {
        double lo = 0.0;
        double hi = 1.0;
    };
    std::array<Range, kFeatureCount> ranges{};

    /// Throws InvalidBounds when any range has hi <= lo or non-finite ends.
    void validate() const;
};

/// Number of interior indices i with values[i-1] < values[i] >= values[i+1]
/// and values[i] > mean(signal). Throws SignalTooShort for signals with
/// fewer than 3 samples.
std::size_t count_peaks(const NormSignal& signal);

/// All 10 features over the whole signal. Throws SignalTooShort (< 3
/// samples) or DegenerateSignal (population variance below 1e-12), since
/// skewness, kurtosis and autocorrelation are undefined without spread.
FeatureVector extract_features(const NormSignal& signal);

/// Maps each feature by (v - lo) / (hi - lo) and clamps to [0, 1].
NormalizedFeatureVector normalize_features(const FeatureVector& fv, const FeatureBounds& bounds);

/// Observed min/max per feature across the collection, widened by
/// margin * (max - min) on each side. A feature with zero observed spread is
/// widened by 0.5 on each side instead, so the hi > lo invariant always
/// holds. Requires at least 2 signals.
FeatureBounds calibrate_bounds(std::span<const NormSignal> signals, double margin);

inline constexpr double kDefaultBoundsMargin = 0.25;

/// JSON de/serialization: object keyed by feature name, each with numeric
/// `lo` and `hi` members.
FeatureBounds load_feature_bounds(const std::filesystem::path& path);
void save_feature_bounds(const std::filesystem::path& path, const FeatureBounds& bounds);

}  // namespace motionkey
