// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace revalign::csv {

using Row = std::vector<std::string>;

struct Table {
  Row header;
  std::vector<Row> rows;
  /// 1-based source line of each row, for error messages.
  std::vector<std::size_t> lines;
};

/// RFC 4180 subset: comma separator, double-quoted fields with "" escapes,
/// LF or CRLF line ends. Blank lines are skipped. Every row must have as many
/// fields as the header.
Table parse(std::string_view text);

std::string escape(std::string_view field);
std::string join(const Row& row);

}  // namespace revalign::csv
