#pragma once

#include "cfs/gf2.hpp"

#include <cstdint>
#include <span>
#include <string_view>

namespace cfs {

/// Identifier carried in public keys for the generic digest below.
inline constexpr std::string_view sha256_hash_id = "sha256";

/// SHA-256 in counter mode, SHA256(data || ctr) for ctr = 0, 1, ... as a
/// 4-byte big-endian suffix, concatenated and truncated to `bits` bits.
BitVector expand_digest(std::span<const std::uint8_t> data, std::size_t bits);

} // namespace cfs
