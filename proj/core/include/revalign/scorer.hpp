// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include "revalign/score_vector.hpp"

namespace revalign {

struct ScoreRequest {
  std::string_view prompt;
  std::string_view statement_text;
  int run = 0;
};

/// Produces raw response text for one scoring request. Implementations must
/// allow concurrent respond() calls.
class Scorer {
 public:
  virtual ~Scorer() = default;

  /// Stable identity of the model behind this scorer; part of every cache key.
  virtual std::string id() const = 0;

  /// Throws AuthError or TransportError for failures that are not about the
  /// content of the response.
  virtual std::string respond(const ScoreRequest& request) = 0;
};

/// Deterministic stand-in for a model: values and NA positions come from
/// SHA-256 of (text, run, seed). Each value is uniform on [0, 1] rounded to
/// two decimals; each criterion is NA with probability 1/4.
ScoreVector mock_score(std::string_view statement_text, int run, std::uint64_t seed);

/// Serializes a vector as the object a well-behaved model would return.
std::string score_vector_json(const ScoreVector& scores);

class MockScorer final : public Scorer {
 public:
  explicit MockScorer(std::uint64_t seed) : seed_(seed) {}

  std::string id() const override;
  std::string respond(const ScoreRequest& request) override;

 private:
  std::uint64_t seed_;
};

/// Exponential backoff schedule: delay(k) = base * factor^k.
struct Backoff {
  std::chrono::milliseconds base{1000};
  double factor = 2.0;

  std::chrono::milliseconds delay(int attempt) const;
};

}  // namespace revalign
