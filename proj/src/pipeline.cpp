#include "motionkey/pipeline.hpp"

#include "motionkey/preprocess.hpp"

namespace motionkey {

NormSignal preprocess_trace(const AccelTrace& trace, const PipelineConfig& config) {
    // Synchronization runs on the raw norm signal; filtering comes last so
    // the bump edge is not smeared before detection.
    const NormSignal norm = euclidean_norm(trace);
    const std::size_t bump = detect_bump(norm, config.bump_threshold);
    const NormSignal trimmed = trim_after_bump(norm, bump, config.skip, config.trim_len);
    return box_filter(trimmed, config.kernel_size);
}

Key derive_key(const AccelTrace& trace, const PipelineConfig& config) {
    const NormSignal prepared = preprocess_trace(trace, config);
    const FeatureVector features = extract_features(prepared);
    const NormalizedFeatureVector normalized = normalize_features(features, config.bounds);
    return generate_key(normalized, config.nb);
}

}  // namespace motionkey
