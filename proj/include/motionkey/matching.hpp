#pragma once

#include <cstddef>
#include <string_view>

#include "motionkey/keygen.hpp"

namespace motionkey {

enum class MatchMode { strict, relaxed };

std::string_view to_string(MatchMode mode);
MatchMode parse_match_mode(std::string_view name);

/// Number of differing bit positions. Keys must have equal bit length and
/// equal nb; keys quantized at different depths are not comparable even if
/// their lengths happened to coincide. Throws LengthMismatch otherwise.
std::size_t hamming_distance(const Key& k1, const Key& k2);

/// True iff the keys agree on every bit.
bool strict_match(const Key& k1, const Key& k2);

/// True iff the keys agree on at least ceil(agree_fraction * length) bits.
/// agree_fraction must lie in (0, 1]; throws InvalidFraction otherwise.
bool relaxed_match(const Key& k1, const Key& k2, double agree_fraction);

/// Dispatches on mode; agree_fraction is ignored in strict mode.
bool keys_match(const Key& k1, const Key& k2, MatchMode mode, double agree_fraction);

}  // namespace motionkey
