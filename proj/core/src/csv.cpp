// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/csv.hpp"

#include "revalign/errors.hpp"

namespace revalign::csv {

namespace {

// Parses one record starting at `pos`; advances `pos` past its line end.
Row parse_record(std::string_view text, std::size_t& pos, std::size_t& line) {
  Row row;
  std::string field;
  bool quoted = false;
  const std::size_t start_line = line;
  while (pos < text.size()) {
    const char c = text[pos];
    if (quoted) {
      if (c == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          field.push_back('"');
          pos += 2;
          continue;
        }
        quoted = false;
        ++pos;
        continue;
      }
      if (c == '\n') ++line;
      field.push_back(c);
      ++pos;
      continue;
    }
    if (c == '"') {
      quoted = true;
      ++pos;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      ++pos;
    } else if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') {
      pos += 2;
      ++line;
      row.push_back(std::move(field));
      return row;
    } else if (c == '\n') {
      ++pos;
      ++line;
      row.push_back(std::move(field));
      return row;
    } else {
      field.push_back(c);
      ++pos;
    }
  }
  if (quoted) throw SchemaError(start_line, "unterminated quoted field");
  row.push_back(std::move(field));
  return row;
}

bool blank(const Row& row) { return row.size() == 1 && row.front().empty(); }

}  // namespace

Table parse(std::string_view text) {
  Table table;
  std::size_t pos = 0;
  std::size_t line = 1;
  bool have_header = false;
  while (pos < text.size()) {
    const std::size_t record_line = line;
    Row row = parse_record(text, pos, line);
    if (blank(row)) continue;
    if (!have_header) {
      table.header = std::move(row);
      have_header = true;
      continue;
    }
    if (row.size() != table.header.size()) {
      throw SchemaError(record_line, "expected " + std::to_string(table.header.size()) + " fields, found " +
                                         std::to_string(row.size()));
    }
    table.rows.push_back(std::move(row));
    table.lines.push_back(record_line);
  }
  return table;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join(const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out.push_back(',');
    out += escape(row[i]);
  }
  return out;
}

}  // namespace revalign::csv
