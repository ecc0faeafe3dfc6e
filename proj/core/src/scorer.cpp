// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/scorer.hpp"

#include <cmath>
#include <string>

#include "json.hpp"
#include "revalign/hash.hpp"

namespace revalign {

ScoreVector mock_score(std::string_view statement_text, int run, std::uint64_t seed) {
  std::string material(statement_text);
  material.push_back('\0');
  material += std::to_string(run);
  material.push_back('\0');
  material += std::to_string(seed);
  const auto digest = sha256(material);

  ScoreVector scores;
  for (std::size_t i = 0; i < kCriterionCount; ++i) {
    // Bytes 0..23 feed the six values, bytes 24..29 the NA draws.
    if (digest[24 + i] < 64) continue;
    const std::uint32_t word = (std::uint32_t{digest[4 * i]} << 24) | (std::uint32_t{digest[4 * i + 1]} << 16) |
                               (std::uint32_t{digest[4 * i + 2]} << 8) | std::uint32_t{digest[4 * i + 3]};
    const double u = static_cast<double>(word) / 4294967295.0;
    scores.set(kAllCriteria[i], std::round(u * 100.0) / 100.0);
  }
  return scores;
}

std::string score_vector_json(const ScoreVector& scores) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (auto c : kAllCriteria) {
    const auto v = scores[c];
    obj[std::string(criterion_key(c))] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  }
  return obj.dump();
}

std::string MockScorer::id() const { return "mock-" + std::to_string(seed_); }

std::string MockScorer::respond(const ScoreRequest& request) {
  return score_vector_json(mock_score(request.statement_text, request.run, seed_));
}

std::chrono::milliseconds Backoff::delay(int attempt) const {
  const double ms = static_cast<double>(base.count()) * std::pow(factor, attempt);
  return std::chrono::milliseconds{static_cast<std::int64_t>(ms)};
}

}  // namespace revalign
