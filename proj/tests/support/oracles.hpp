// Independent brute-force reference implementations used as oracles. These
// are written from the definitions alone and must never call into the
// library code they check.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracles {

inline std::vector<double> euclidean_norm(const std::vector<std::array<double, 3>>& axes) {
    std::vector<double> out;
    out.reserve(axes.size());
    for (const auto& a : axes) {
        out.push_back(std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]));
    }
    return out;
}

// Centered truncated-window moving average; window spans floor((k-1)/2)
// samples left of the center, the rest right, clipped to the signal.
inline std::vector<double> box_filter(const std::vector<double>& v, std::size_t k) {
    const auto n = static_cast<std::ptrdiff_t>(v.size());
    const auto left = static_cast<std::ptrdiff_t>((k - 1) / 2);
    const auto right = static_cast<std::ptrdiff_t>(k - 1) - left;
    std::vector<double> out(v.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        long double sum = 0.0L;
        std::ptrdiff_t count = 0;
        for (std::ptrdiff_t j = i - left; j <= i + right; ++j) {
            if (j < 0 || j >= n) continue;
            sum += v[static_cast<std::size_t>(j)];
            ++count;
        }
        out[static_cast<std::size_t>(i)] = static_cast<double>(sum / count);
    }
    return out;
}

struct FeatureSet {
    double num_peaks, rms, mean, variance, skewness, kurtosis, crest_factor, peak_to_peak,
        autocorr_lag1, avg_power;
};

inline double mean_of(const std::vector<double>& v) {
    long double s = 0.0L;
    for (double x : v) s += x;
    return static_cast<double>(s / v.size());
}

inline std::size_t count_peaks(const std::vector<double>& v) {
    const double mu = mean_of(v);
    std::size_t peaks = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i - 1] < v[i] && v[i] >= v[i + 1] && v[i] > mu) ++peaks;
    }
    return peaks;
}

inline FeatureSet extract_features(const std::vector<double>& v) {
    const auto n = static_cast<long double>(v.size());
    const double mu = mean_of(v);

    long double power = 0.0L, m2 = 0.0L, m3 = 0.0L, m4 = 0.0L;
    double lo = v[0], hi = v[0];
    for (double x : v) {
        power += static_cast<long double>(x) * x;
        const long double d = x - mu;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
        if (x < lo) lo = x;
        if (x > hi) hi = x;
    }
    power /= n;
    m2 /= n;
    m3 /= n;
    m4 /= n;

    long double autocov = 0.0L;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        autocov += (static_cast<long double>(v[i]) - mu) * (static_cast<long double>(v[i + 1]) - mu);
    }

    FeatureSet f{};
    f.num_peaks = static_cast<double>(count_peaks(v));
    f.rms = static_cast<double>(std::sqrt(power));
    f.mean = mu;
    f.variance = static_cast<double>(m2);
    f.skewness = static_cast<double>(m3 / std::pow(m2, 1.5L));
    f.kurtosis = static_cast<double>(m4 / (m2 * m2));
    f.crest_factor = hi / f.rms;
    f.peak_to_peak = hi - lo;
    f.autocorr_lag1 = static_cast<double>(autocov / (m2 * n));
    f.avg_power = static_cast<double>(power);
    return f;
}

inline std::array<double, 10> as_array(const FeatureSet& f) {
    return {f.num_peaks, f.rms,          f.mean,         f.variance,      f.skewness,
            f.kurtosis,  f.crest_factor, f.peak_to_peak, f.autocorr_lag1, f.avg_power};
}

inline std::size_t hamming(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) ++d;
    }
    return d;
}

// Direct (non-log) Bernoulli mixture likelihood; usable only for small D
// where the products stay away from underflow.
inline double mixture_likelihood(const std::vector<double>& weights,
                                 const std::vector<std::vector<double>>& probs,
                                 const std::vector<std::uint8_t>& x) {
    double total = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        double prod = weights[k];
        for (std::size_t d = 0; d < x.size(); ++d) {
            prod *= x[d] ? probs[k][d] : 1.0 - probs[k][d];
        }
        total += prod;
    }
    return total;
}

inline double binary_entropy_bits(double p) {
    return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

// Lag of the cross-covariance peak between two equal-length signals,
// searched over [-max_lag, max_lag]. Signals are mean-centered first so the
// peak tracks waveform alignment, not envelope overlap. max_lag must stay
// below the signal's fundamental period or periodic aliases win. Positive
// lag means b is delayed relative to a.
inline std::ptrdiff_t xcorr_peak_lag(const std::vector<double>& a, const std::vector<double>& b,
                                     std::ptrdiff_t max_lag) {
    const auto n = static_cast<std::ptrdiff_t>(std::min(a.size(), b.size()));
    const double mean_a = mean_of(a);
    const double mean_b = mean_of(b);
    double best = -1e300;
    std::ptrdiff_t best_lag = 0;
    for (std::ptrdiff_t lag = -max_lag; lag <= max_lag; ++lag) {
        double acc = 0.0;
        std::ptrdiff_t count = 0;
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const std::ptrdiff_t j = i + lag;
            if (j < 0 || j >= n) continue;
            acc += (a[static_cast<std::size_t>(i)] - mean_a) *
                   (b[static_cast<std::size_t>(j)] - mean_b);
            ++count;
        }
        acc /= static_cast<double>(count);
        if (acc > best) {
            best = acc;
            best_lag = lag;
        }
    }
    return best_lag;
}

}  // namespace oracles
