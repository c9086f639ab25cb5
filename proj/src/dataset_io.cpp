#include "motionkey/dataset_io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <regex>
#include <string>

#include "motionkey/errors.hpp"
#include "motionkey/rng.hpp"

namespace motionkey {

namespace {

std::uint64_t pair_seed(std::uint64_t seed, int subject, int shake) {
    return derive_seed(seed, (static_cast<std::uint64_t>(subject) << 20) ^
                                 static_cast<std::uint64_t>(shake));
}

}  // namespace

std::string dataset_file_name(int subject, int shake, int device) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "subj%02d_shake%02d_dev%d.csv", subject, shake, device);
    return buf;
}

std::vector<PositivePair> load_positive_pairs(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw IoError(dir.string() + " is not a directory");
    }
    static const std::regex pattern(R"(subj(\d+)_shake(\d+)_dev([12])\.csv)");

    std::map<std::pair<int, int>, std::pair<std::filesystem::path, std::filesystem::path>> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::smatch match;
        const std::string name = entry.path().filename().string();
        if (!std::regex_match(name, match, pattern)) continue;
        const int subject = std::stoi(match[1]);
        const int shake = std::stoi(match[2]);
        const int device = std::stoi(match[3]);
        auto& slot = files[{subject, shake}];
        (device == 1 ? slot.first : slot.second) = entry.path();
    }

    std::vector<PositivePair> positives;
    for (const auto& [key, paths] : files) {
        if (paths.first.empty() || paths.second.empty()) continue;  // incomplete pair
        PositivePair pair{load_trace_csv(paths.first), load_trace_csv(paths.second), key.first,
                          key.second};
        positives.push_back(std::move(pair));
    }
    if (positives.empty()) {
        throw IoError(dir.string() + " contains no complete subjNN_shakeMM_dev{1,2}.csv pair");
    }
    return positives;
}

std::vector<std::filesystem::path> write_synth_dataset(const std::filesystem::path& dir,
                                                       const SynthConfig& config, int subjects,
                                                       int shakes, std::uint64_t seed,
                                                       bool shared) {
    config.validate();
    if (subjects < 1 || shakes < 1) {
        throw InvalidConfig("dataset needs at least 1 subject and 1 shake");
    }
    std::filesystem::create_directories(dir);

    std::vector<std::filesystem::path> written;
    for (int subject = 1; subject <= subjects; ++subject) {
        for (int shake = 1; shake <= shakes; ++shake) {
            const std::uint64_t s = pair_seed(seed, subject, shake);
            const auto [dev1, dev2] =
                shared ? synth_shared_pair(config, s) : synth_independent_pair(config, s);
            const auto path1 = dir / dataset_file_name(subject, shake, 1);
            const auto path2 = dir / dataset_file_name(subject, shake, 2);
            write_trace_csv(path1, dev1);
            write_trace_csv(path2, dev2);
            written.push_back(path1);
            written.push_back(path2);
        }
    }
    return written;
}

std::vector<PositivePair> make_synth_positives(const SynthConfig& config, int subjects, int shakes,
                                               std::uint64_t seed) {
    config.validate();
    if (subjects < 1 || shakes < 1) {
        throw InvalidConfig("dataset needs at least 1 subject and 1 shake");
    }
    std::vector<PositivePair> positives;
    positives.reserve(static_cast<std::size_t>(subjects) * static_cast<std::size_t>(shakes));
    for (int subject = 1; subject <= subjects; ++subject) {
        for (int shake = 1; shake <= shakes; ++shake) {
            auto [dev1, dev2] = synth_shared_pair(config, pair_seed(seed, subject, shake));
            positives.push_back(
                PositivePair{std::move(dev1), std::move(dev2), subject, shake});
        }
    }
    return positives;
}

}  // namespace motionkey
