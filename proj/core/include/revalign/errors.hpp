// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revalign {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A record violated the interchange schema. `line()` is 1-based, 0 when not
/// tied to a line.
class SchemaError : public Error {
 public:
  SchemaError(std::size_t line, const std::string& message);
  explicit SchemaError(const std::string& message) : SchemaError(0, message) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ExtractionError : public Error {
 public:
  using Error::Error;
};

/// Base for everything wrong with a scorer's raw response text.
class ResponseError : public Error {
 public:
  using Error::Error;
};

class MalformedResponse : public ResponseError {
 public:
  using ResponseError::ResponseError;
};

class OutOfRangeScore : public ResponseError {
 public:
  OutOfRangeScore(std::string key, double value);

  const std::string& key() const noexcept { return key_; }
  double value() const noexcept { return value_; }

 private:
  std::string key_;
  double value_;
};

class MissingKey : public ResponseError {
 public:
  explicit MissingKey(std::string key);

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class AuthError : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

class RateLimitExceeded : public TransportError {
 public:
  using TransportError::TransportError;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class MixedArticle : public Error {
 public:
  using Error::Error;
};

class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

class InsufficientRuns : public Error {
 public:
  using Error::Error;
};

}  // namespace revalign
