// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace revalign {

using Sha256Digest = std::array<std::uint8_t, 32>;

Sha256Digest sha256(std::string_view data);

/// Lowercase hex of the SHA-256 digest.
std::string sha256_hex(std::string_view data);

std::string to_hex(const Sha256Digest& digest);

}  // namespace revalign
