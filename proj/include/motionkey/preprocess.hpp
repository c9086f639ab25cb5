#pragma once

#include <cstddef>
#include <vector>

#include "motionkey/signal.hpp"

namespace motionkey {

/// 1-D signal of per-sample Euclidean norms of a tri-axial trace. All values
/// are finite and non-negative; at least 2 values.
class NormSignal {
public:
    NormSignal(double sample_rate, std::vector<double> values);

    double sample_rate() const { return sample_rate_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const NormSignal&) const = default;

private:
    double sample_rate_ = 0.0;
    std::vector<double> values_;
};

/// Element-wise Euclidean norm sqrt(ax^2 + ay^2 + az^2); same length and
/// sample rate as the input trace.
NormSignal euclidean_norm(const AccelTrace& trace);

/// Smallest index whose value exceeds `threshold` (strictly). Throws
/// NoBumpDetected when no value does.
std::size_t detect_bump(const NormSignal& signal, double threshold);

/// Subsequence of exactly `length` samples starting at bump_index + skip.
/// Throws InsufficientSamples when the window does not fit.
NormSignal trim_after_bump(const NormSignal& signal, std::size_t bump_index, std::size_t skip,
                           std::size_t length);

/// Centered moving average of width kernel_size. The window covers
/// floor((k-1)/2) samples to the left of the center and the rest to the
/// right; at the edges it is truncated to the available samples and the sum
/// is divided by the actual window length. Output length equals input
/// length; kernel_size 1 is the identity.
NormSignal box_filter(const NormSignal& signal, std::size_t kernel_size);

}  // namespace motionkey
