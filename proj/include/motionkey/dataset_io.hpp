#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "motionkey/eval.hpp"
#include "motionkey/synth.hpp"

namespace motionkey {

/// File naming scheme for datasets on disk:
///   subj<NN>_shake<MM>_dev<1|2>.csv
/// A positive pair is the dev1/dev2 file pair sharing subject and shake.
std::string dataset_file_name(int subject, int shake, int device);

/// Loads every complete dev1/dev2 pair found in the directory. Throws
/// IoError when the directory does not exist or contains no complete pair.
std::vector<PositivePair> load_positive_pairs(const std::filesystem::path& dir);

/// Generates subjects x shakes shared pairs (or independent pairs) and
/// writes them under the naming scheme. The per-pair seed is derived from
/// (seed, subject, shake), so any subset regenerates identically. Returns
/// the file paths written, in write order.
std::vector<std::filesystem::path> write_synth_dataset(const std::filesystem::path& dir,
                                                       const SynthConfig& config, int subjects,
                                                       int shakes, std::uint64_t seed, bool shared);

/// In-memory variant of the same layout; used by evaluations that do not
/// need files.
std::vector<PositivePair> make_synth_positives(const SynthConfig& config, int subjects, int shakes,
                                               std::uint64_t seed);

}  // namespace motionkey
