#include "motionkey/signal.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <utility>

#include "motionkey/errors.hpp"

namespace motionkey {

namespace {

void validate_and_regenerate(double period, std::vector<TriAxialSample>& samples) {
    if (!(period > 0.0) || !std::isfinite(period)) {
        throw InvalidTrace("sample period must be positive and finite");
    }
    if (samples.size() < 2) {
        throw InvalidTrace("trace needs at least 2 samples, got " +
                           std::to_string(samples.size()));
    }
    const double t0 = samples.front().t;
    if (!std::isfinite(t0) || t0 < 0.0) {
        throw InvalidTrace("timestamps must be finite and non-negative");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const TriAxialSample& s = samples[i];
        if (!std::isfinite(s.t) || !std::isfinite(s.ax) || !std::isfinite(s.ay) ||
            !std::isfinite(s.az)) {
            throw InvalidTrace("non-finite value at sample " + std::to_string(i));
        }
        if (i > 0) {
            const double dt = s.t - samples[i - 1].t;
            if (dt <= 0.0) {
                throw NonUniformSampling("timestamps not strictly increasing at sample " +
                                         std::to_string(i));
            }
            if (std::abs(dt - period) > AccelTrace::kSpacingTolerance) {
                throw NonUniformSampling("sample spacing " + std::to_string(dt) + " deviates from " +
                                         std::to_string(period) + " at sample " +
                                         std::to_string(i));
            }
        }
    }
    // The grid is authoritative from here on.
    for (std::size_t i = 0; i < samples.size(); ++i) {
        samples[i].t = t0 + static_cast<double>(i) * period;
    }
}

double parse_field(std::string_view field, std::size_t row) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw MalformedRow("row " + std::to_string(row) + ": non-numeric field '" +
                           std::string(field) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

}  // namespace

AccelTrace::AccelTrace(double sample_rate, std::vector<TriAxialSample> samples) {
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
        throw InvalidTrace("sample rate must be positive and finite");
    }
    period_ = 1.0 / sample_rate;
    samples_ = std::move(samples);
    validate_and_regenerate(period_, samples_);
}

AccelTrace AccelTrace::from_period(double sample_period, std::vector<TriAxialSample> samples) {
    AccelTrace trace;
    trace.period_ = sample_period;
    trace.samples_ = std::move(samples);
    validate_and_regenerate(trace.period_, trace.samples_);
    return trace;
}

AccelTrace load_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw EmptyFile(path.string() + " is empty");
    }
    if (trim(line) != "t,ax,ay,az") {
        throw MalformedRow("expected header 't,ax,ay,az', got '" + std::string(trim(line)) + "'");
    }

    std::vector<TriAxialSample> samples;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        const std::string_view content = trim(line);
        if (content.empty()) continue;

        TriAxialSample sample;
        double* fields[4] = {&sample.t, &sample.ax, &sample.ay, &sample.az};
        std::size_t pos = 0;
        for (int f = 0; f < 4; ++f) {
            const std::size_t comma = content.find(',', pos);
            const bool last = (f == 3);
            if (last != (comma == std::string_view::npos)) {
                throw MalformedRow("row " + std::to_string(row) + ": expected 4 fields");
            }
            const std::string_view field =
                content.substr(pos, last ? std::string_view::npos : comma - pos);
            *fields[f] = parse_field(trim(field), row);
            pos = comma + 1;
        }
        samples.push_back(sample);
    }

    if (samples.empty()) {
        throw EmptyFile(path.string() + " has no data rows");
    }
    if (samples.size() < 2) {
        throw InvalidTrace(path.string() + " has a single sample; cannot infer sample rate");
    }
    const double period = samples[1].t - samples[0].t;
    if (!(period > 0.0)) {
        throw NonUniformSampling("first two timestamps are not increasing");
    }
    return AccelTrace::from_period(period, std::move(samples));
}

void write_trace_csv(const std::filesystem::path& path, const AccelTrace& trace) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << "t,ax,ay,az\n";
    char buf[128];
    for (const TriAxialSample& s : trace.samples()) {
        // %.17g round-trips every finite double exactly.
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", s.t, s.ax, s.ay, s.az);
        out << buf;
    }
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

}  // namespace motionkey
