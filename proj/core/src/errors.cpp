// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/errors.hpp"

#include <sstream>

namespace revalign {

namespace {

std::string with_line(std::size_t line, const std::string& message) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

std::string describe_out_of_range(const std::string& key, double value) {
  std::ostringstream out;
  out << "score " << key << " = " << value << " outside [0, 1]";
  return out.str();
}

}  // namespace

SchemaError::SchemaError(std::size_t line, const std::string& message)
    : Error(with_line(line, message)), line_(line) {}

OutOfRangeScore::OutOfRangeScore(std::string key, double value)
    : ResponseError(describe_out_of_range(key, value)), key_(std::move(key)), value_(value) {}

MissingKey::MissingKey(std::string key)
    : ResponseError("response object lacks key " + key), key_(std::move(key)) {}

}  // namespace revalign
