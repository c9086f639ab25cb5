#include "motionkey/preprocess.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "motionkey/errors.hpp"

namespace motionkey {

NormSignal::NormSignal(double sample_rate, std::vector<double> values)
    : sample_rate_(sample_rate), values_(std::move(values)) {
    if (!(sample_rate_ > 0.0) || !std::isfinite(sample_rate_)) {
        throw InvalidSignal("sample rate must be positive and finite");
    }
    if (values_.size() < 2) {
        throw InvalidSignal("norm signal needs at least 2 values");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
            throw InvalidSignal("norm value at index " + std::to_string(i) +
                                " is negative or non-finite");
        }
    }
}

NormSignal euclidean_norm(const AccelTrace& trace) {
    std::vector<double> values;
    values.reserve(trace.size());
    for (const TriAxialSample& s : trace.samples()) {
        values.push_back(std::sqrt(s.ax * s.ax + s.ay * s.ay + s.az * s.az));
    }
    return NormSignal(trace.sample_rate(), std::move(values));
}

std::size_t detect_bump(const NormSignal& signal, double threshold) {
    if (!(threshold > 0.0) || !std::isfinite(threshold)) {
        throw InvalidSignal("bump threshold must be positive");
    }
    const std::vector<double>& v = signal.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > threshold) return i;
    }
    throw NoBumpDetected("no sample exceeds threshold " + std::to_string(threshold));
}

NormSignal trim_after_bump(const NormSignal& signal, std::size_t bump_index, std::size_t skip,
                           std::size_t length) {
    if (length < 2) {
        throw InsufficientSamples("trim length must be at least 2");
    }
    const std::size_t begin = bump_index + skip;
    if (begin + length > signal.size()) {
        throw InsufficientSamples("window [" + std::to_string(begin) + ", " +
                                  std::to_string(begin + length) + ") exceeds signal length " +
                                  std::to_string(signal.size()));
    }
    std::vector<double> values(signal.values().begin() + static_cast<std::ptrdiff_t>(begin),
                               signal.values().begin() + static_cast<std::ptrdiff_t>(begin + length));
    return NormSignal(signal.sample_rate(), std::move(values));
}

NormSignal box_filter(const NormSignal& signal, std::size_t kernel_size) {
    if (kernel_size < 1) {
        throw InvalidKernelSize("kernel size must be at least 1");
    }
    if (kernel_size == 1) {
        return signal;
    }
    const std::vector<double>& v = signal.values();
    const std::size_t n = v.size();
    const std::size_t left = (kernel_size - 1) / 2;
    const std::size_t right = kernel_size - 1 - left;

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = (i >= left) ? i - left : 0;
        const std::size_t hi = (i + right < n) ? i + right : n - 1;  // inclusive
        double sum = 0.0;
        for (std::size_t j = lo; j <= hi; ++j) sum += v[j];
        out[i] = sum / static_cast<double>(hi - lo + 1);
    }
    return NormSignal(signal.sample_rate(), std::move(out));
}

}  // namespace motionkey
