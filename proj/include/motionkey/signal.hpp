#pragma once

#include <filesystem>
#include <vector>

namespace motionkey {

/// One tri-axial linear-acceleration reading. Gravity is assumed to be
/// removed upstream; units are m/s^2, timestamps are seconds.
struct TriAxialSample {
    double t = 0.0;
    double ax = 0.0;
    double ay = 0.0;
    double az = 0.0;

    bool operator==(const TriAxialSample&) const = default;
};

/// Uniformly sampled tri-axial acceleration trace for one device and one
/// shake. Construction validates: at least 2 samples, finite values,
/// non-negative strictly increasing timestamps with spacing equal to the
/// sample period within 1e-9 s. Timestamps are regenerated from the sample
/// period internally, so a trace that survives validation is exactly
/// uniform.
class AccelTrace {
public:
    static constexpr double kSpacingTolerance = 1e-9;  // seconds

    AccelTrace(double sample_rate, std::vector<TriAxialSample> samples);

    /// Construct from an explicit sample period instead of a rate. Used by
    /// the CSV loader, where the period is what the file actually encodes.
    static AccelTrace from_period(double sample_period, std::vector<TriAxialSample> samples);

    double sample_rate() const { return 1.0 / period_; }
    double sample_period() const { return period_; }
    std::size_t size() const { return samples_.size(); }
    const std::vector<TriAxialSample>& samples() const { return samples_; }

    bool operator==(const AccelTrace&) const = default;

private:
    AccelTrace() = default;

    double period_ = 0.0;
    std::vector<TriAxialSample> samples_;
};

/// Reads a trace from CSV (header `t,ax,ay,az`, one sample per row, '.'
/// decimal point, LF or CRLF). The sample period is inferred from the first
/// two timestamps and every row is checked against it.
///
/// Throws IoError if the file cannot be opened, EmptyFile if it has no data
/// rows, MalformedRow on bad field counts or non-numeric fields, and
/// NonUniformSampling when the spacing deviates beyond tolerance.
AccelTrace load_trace_csv(const std::filesystem::path& path);

/// Writes the CSV format accepted by load_trace_csv. Values are printed with
/// enough digits that reloading reproduces every double bit-exactly.
void write_trace_csv(const std::filesystem::path& path, const AccelTrace& trace);

}  // namespace motionkey
