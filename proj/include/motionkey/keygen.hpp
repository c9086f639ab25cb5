#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motionkey/features.hpp"

namespace motionkey {

/// Binary key derived from a normalized feature vector: kFeatureCount
/// groups of nb bits each, concatenated in feature order, MSB first within
/// a group.
class Key {
public:
    /// bits must contain exactly kFeatureCount * nb entries of 0 or 1.
    Key(std::vector<std::uint8_t> bits, unsigned nb);

    static Key from_string(const std::string& bits, unsigned nb);

    unsigned nb() const { return nb_; }
    std::size_t length() const { return bits_.size(); }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    /// ASCII '0'/'1' rendering used on the wire and in key files.
    std::string to_string() const;

    /// Integer value of the nb-bit group for one feature index.
    std::uint32_t group_value(std::size_t feature_index) const;

    bool operator==(const Key&) const = default;

private:
    std::vector<std::uint8_t> bits_;
    unsigned nb_ = 0;
};

inline constexpr unsigned kMaxBitsPerFeature = 16;

/// Uniform-bin quantizer: floor(v * 2^nb) with the top edge folded into the
/// last bin, so v = 1 maps to 2^nb - 1. Throws OutOfRange for v outside
/// [0, 1] and InvalidBitCount for nb outside [1, kMaxBitsPerFeature].
std::uint32_t quantize_value(double v, unsigned nb);

/// Quantizes each of the 10 features and concatenates the nb-bit binary
/// encodings in feature order.
Key generate_key(const NormalizedFeatureVector& nfv, unsigned nb);

}  // namespace motionkey
