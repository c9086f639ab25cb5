#include "motionkey/matching.hpp"

#include <string>

#include "motionkey/errors.hpp"

namespace motionkey {

std::string_view to_string(MatchMode mode) {
    return mode == MatchMode::strict ? "strict" : "relaxed";
}

MatchMode parse_match_mode(std::string_view name) {
    if (name == "strict") return MatchMode::strict;
    if (name == "relaxed") return MatchMode::relaxed;
    throw Error("unknown match mode '" + std::string(name) + "'");
}

std::size_t hamming_distance(const Key& k1, const Key& k2) {
    if (k1.length() != k2.length() || k1.nb() != k2.nb()) {
        throw LengthMismatch("keys are not comparable: lengths " + std::to_string(k1.length()) +
                             "/" + std::to_string(k2.length()) + ", nb " +
                             std::to_string(k1.nb()) + "/" + std::to_string(k2.nb()));
    }
    std::size_t distance = 0;
    for (std::size_t i = 0; i < k1.length(); ++i) {
        distance += static_cast<std::size_t>(k1.bits()[i] != k2.bits()[i]);
    }
    return distance;
}

bool strict_match(const Key& k1, const Key& k2) { return hamming_distance(k1, k2) == 0; }

bool relaxed_match(const Key& k1, const Key& k2, double agree_fraction) {
    if (!(agree_fraction > 0.0) || !(agree_fraction <= 1.0)) {
        throw InvalidFraction("agree_fraction must lie in (0, 1], got " +
                              std::to_string(agree_fraction));
    }
    const std::size_t length = k1.length();
    const std::size_t agreed = length - hamming_distance(k1, k2);
    // agreed >= ceil(f * length) for integral agreed is exactly agreed >= f * length.
    return static_cast<double>(agreed) >= agree_fraction * static_cast<double>(length);
}

bool keys_match(const Key& k1, const Key& k2, MatchMode mode, double agree_fraction) {
    return mode == MatchMode::strict ? strict_match(k1, k2)
                                     : relaxed_match(k1, k2, agree_fraction);
}

}  // namespace motionkey
