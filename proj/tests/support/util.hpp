#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "motionkey/keygen.hpp"
#include "motionkey/preprocess.hpp"
#include "motionkey/rng.hpp"
#include "motionkey/signal.hpp"

namespace testutil {

// |a - b| <= tol * max(|a|, |b|, 1); the unit floor keeps near-zero values
// from inflating the relative error.
inline bool approx_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1.0});
}

inline motionkey::AccelTrace random_trace(motionkey::Rng& rng, std::size_t n, double rate,
                                          double scale = 10.0) {
    std::vector<motionkey::TriAxialSample> samples;
    samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        motionkey::TriAxialSample s;
        s.t = static_cast<double>(i) / rate;
        s.ax = rng.uniform(-scale, scale);
        s.ay = rng.uniform(-scale, scale);
        s.az = rng.uniform(-scale, scale);
        samples.push_back(s);
    }
    return motionkey::AccelTrace(rate, std::move(samples));
}

inline motionkey::NormSignal random_norm_signal(motionkey::Rng& rng, std::size_t n,
                                                double lo = 0.0, double hi = 20.0) {
    std::vector<double> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) values.push_back(rng.uniform(lo, hi));
    return motionkey::NormSignal(100.0, std::move(values));
}

inline motionkey::Key random_key(motionkey::Rng& rng, unsigned nb) {
    std::vector<std::uint8_t> bits(motionkey::kFeatureCount * nb);
    for (auto& b : bits) b = rng.bernoulli(0.5) ? 1 : 0;
    return motionkey::Key(std::move(bits), nb);
}

/// Key equal to `base` except at exactly `flips` distinct positions.
inline motionkey::Key flip_bits(const motionkey::Key& base, std::size_t flips,
                                motionkey::Rng& rng) {
    std::vector<std::uint8_t> bits = base.bits();
    std::vector<std::size_t> positions(bits.size());
    for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
    for (std::size_t i = 0; i < flips; ++i) {  // partial Fisher-Yates
        const std::size_t j = i + rng.uniform_int(0, positions.size() - 1 - i);
        std::swap(positions[i], positions[j]);
        bits[positions[i]] ^= 1;
    }
    return motionkey::Key(std::move(bits), base.nb());
}

/// Unique scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        path_ = std::filesystem::temp_directory_path() /
                ("motionkey_" + tag + "_" + std::to_string(counter_++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

}  // namespace testutil
