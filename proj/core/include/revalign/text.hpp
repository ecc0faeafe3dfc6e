// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revalign {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
std::size_t count_non_whitespace(std::string_view s);

/// Collapses runs of whitespace into one space and trims the ends.
std::string collapse_whitespace(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

/// Decimal rendering rounded half away from zero at `decimals` places.
/// Rounding happens on the decimal expansion, so 0.25 -> "0.3" at one place.
std::string format_fixed(double value, int decimals);

/// Strict YYYY-MM-DD.
std::optional<std::chrono::year_month_day> parse_date(std::string_view s);
std::string format_date(std::chrono::year_month_day date);

using Timestamp = std::chrono::sys_seconds;

/// ISO-8601 UTC, e.g. 2024-05-01T12:00:00Z.
std::string format_timestamp(Timestamp t);
std::optional<Timestamp> parse_timestamp(std::string_view s);
Timestamp now_seconds();

std::string read_file(const std::filesystem::path& path);
/// Writes via a sibling temp file and rename.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace revalign
