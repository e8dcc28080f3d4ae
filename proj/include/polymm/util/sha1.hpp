//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef POLYMM_UTIL_SHA1_HPP
#define POLYMM_UTIL_SHA1_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace polymm {

/// Lowercase hex SHA-1 of a byte buffer.
std::string sha1_hex(std::span<const std::byte> data);
std::string sha1_hex(std::string_view text);
std::string sha1_hex_file(const std::filesystem::path& path);

/// First 8 bytes of SHA-1(text) as a big-endian integer; used to derive
/// per-item deterministic seeds from string keys.
std::uint64_t sha1_seed(std::string_view text);

}  // namespace polymm

#endif  // POLYMM_UTIL_SHA1_HPP
