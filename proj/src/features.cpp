#include "motionkey/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include <json.hpp>

#include "motionkey/errors.hpp"

namespace motionkey {

namespace {
constexpr double kVarianceFloor = 1e-12;
constexpr double kDegenerateSpread = 1e-12;
}  // namespace

void FeatureBounds::validate() const {
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        const Range& r = ranges[i];
        if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.hi > r.lo)) {
            throw InvalidBounds("bounds for " + std::string(kFeatureNames[i]) +
                                " must satisfy hi > lo");
        }
    }
}

std::size_t count_peaks(const NormSignal& signal) {
    const std::vector<double>& v = signal.values();
    if (v.size() < 3) {
        throw SignalTooShort("peak counting needs at least 3 samples");
    }
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());

    std::size_t peaks = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i - 1] < v[i] && v[i] >= v[i + 1] && v[i] > mean) ++peaks;
    }
    return peaks;
}

FeatureVector extract_features(const NormSignal& signal) {
    const std::vector<double>& v = signal.values();
    const auto n = static_cast<double>(v.size());
    if (v.size() < 3) {
        throw SignalTooShort("feature extraction needs at least 3 samples");
    }

    double sum = 0.0;
    double sum_sq = 0.0;
    double min = v.front();
    double max = v.front();
    for (double x : v) {
        sum += x;
        sum_sq += x * x;
        min = std::min(min, x);
        max = std::max(max, x);
    }
    const double mean = sum / n;
    const double avg_power = sum_sq / n;

    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
    for (double x : v) {
        const double d = x - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if (m2 < kVarianceFloor) {
        throw DegenerateSignal("population variance " + std::to_string(m2) +
                               " below threshold; higher moments undefined");
    }

    double autocov = 0.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        autocov += (v[i] - mean) * (v[i + 1] - mean);
    }

    const double sigma = std::sqrt(m2);
    FeatureVector fv;
    fv.num_peaks = count_peaks(signal);
    fv.rms = std::sqrt(avg_power);
    fv.mean = mean;
    fv.variance = m2;
    fv.skewness = m3 / (sigma * sigma * sigma);
    fv.kurtosis = m4 / (m2 * m2);
    fv.crest_factor = max / fv.rms;
    fv.peak_to_peak = max - min;
    fv.autocorr_lag1 = autocov / (m2 * n);
    fv.avg_power = avg_power;
    return fv;
}

NormalizedFeatureVector normalize_features(const FeatureVector& fv, const FeatureBounds& bounds) {
    bounds.validate();
    const std::array<double, kFeatureCount> raw = fv.as_array();
    NormalizedFeatureVector out;
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        const auto& r = bounds.ranges[i];
        out.values[i] = std::clamp((raw[i] - r.lo) / (r.hi - r.lo), 0.0, 1.0);
    }
    return out;
}

FeatureBounds calibrate_bounds(std::span<const NormSignal> signals, double margin) {
    if (signals.size() < 2) {
        throw InsufficientData("bounds calibration needs at least 2 signals");
    }
    if (!(margin >= 0.0) || !std::isfinite(margin)) {
        throw InvalidBounds("margin must be non-negative");
    }

    std::array<double, kFeatureCount> lo;
    std::array<double, kFeatureCount> hi;
    lo.fill(std::numeric_limits<double>::infinity());
    hi.fill(-std::numeric_limits<double>::infinity());
    for (const NormSignal& s : signals) {
        const std::array<double, kFeatureCount> f = extract_features(s).as_array();
        for (std::size_t i = 0; i < kFeatureCount; ++i) {
            lo[i] = std::min(lo[i], f[i]);
            hi[i] = std::max(hi[i], f[i]);
        }
    }

    FeatureBounds bounds;
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        const double spread = hi[i] - lo[i];
        const double pad = spread > kDegenerateSpread ? margin * spread : 0.5;
        bounds.ranges[i] = {lo[i] - pad, hi[i] + pad};
    }
    bounds.validate();
    return bounds;
}

FeatureBounds load_feature_bounds(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidBounds("bounds file " + path.string() + ": " + e.what());
    }
    FeatureBounds bounds;
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        const std::string name(kFeatureNames[i]);
        if (!doc.contains(name) || !doc[name].contains("lo") || !doc[name].contains("hi")) {
            throw InvalidBounds("bounds file misses feature '" + name + "'");
        }
        bounds.ranges[i] = {doc[name]["lo"].get<double>(), doc[name]["hi"].get<double>()};
    }
    bounds.validate();
    return bounds;
}

void save_feature_bounds(const std::filesystem::path& path, const FeatureBounds& bounds) {
    bounds.validate();
    nlohmann::json doc;
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        doc[std::string(kFeatureNames[i])] = {{"lo", bounds.ranges[i].lo},
                                              {"hi", bounds.ranges[i].hi}};
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << doc.dump(2) << '\n';
}

}  // namespace motionkey
