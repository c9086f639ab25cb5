#include "motionkey/keygen.hpp"

#include <cmath>
#include <utility>

#include "motionkey/errors.hpp"

namespace motionkey {

Key::Key(std::vector<std::uint8_t> bits, unsigned nb) : bits_(std::move(bits)), nb_(nb) {
    if (nb_ < 1 || nb_ > kMaxBitsPerFeature) {
        throw InvalidBitCount("nb must be in [1, " + std::to_string(kMaxBitsPerFeature) + "], got " +
                              std::to_string(nb_));
    }
    if (bits_.size() != kFeatureCount * nb_) {
        throw InvalidKey("key must hold " + std::to_string(kFeatureCount * nb_) + " bits, got " +
                         std::to_string(bits_.size()));
    }
    for (std::uint8_t b : bits_) {
        if (b > 1) throw InvalidKey("key bits must be 0 or 1");
    }
}

Key Key::from_string(const std::string& bits, unsigned nb) {
    std::vector<std::uint8_t> raw;
    raw.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidKey("key string must contain only '0' and '1'");
        raw.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Key(std::move(raw), nb);
}

std::string Key::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (std::uint8_t b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

std::uint32_t Key::group_value(std::size_t feature_index) const {
    std::uint32_t value = 0;
    for (unsigned j = 0; j < nb_; ++j) {
        value = (value << 1) | bits_[feature_index * nb_ + j];
    }
    return value;
}

std::uint32_t quantize_value(double v, unsigned nb) {
    if (nb < 1 || nb > kMaxBitsPerFeature) {
        throw InvalidBitCount("nb must be in [1, " + std::to_string(kMaxBitsPerFeature) + "], got " +
                              std::to_string(nb));
    }
    if (!(v >= 0.0) || !(v <= 1.0)) {
        throw OutOfRange("quantizer input " + std::to_string(v) + " outside [0, 1]");
    }
    const auto levels = std::uint32_t{1} << nb;
    const auto bin = static_cast<std::uint32_t>(std::floor(v * static_cast<double>(levels)));
    return bin >= levels ? levels - 1 : bin;  // top edge folds into the last bin
}

Key generate_key(const NormalizedFeatureVector& nfv, unsigned nb) {
    std::vector<std::uint8_t> bits;
    bits.reserve(kFeatureCount * nb);
    for (double v : nfv.values) {
        const std::uint32_t q = quantize_value(v, nb);
        for (unsigned j = 0; j < nb; ++j) {
            bits.push_back(static_cast<std::uint8_t>((q >> (nb - 1 - j)) & 1u));  // MSB first
        }
    }
    return Key(std::move(bits), nb);
}

}  // namespace motionkey
