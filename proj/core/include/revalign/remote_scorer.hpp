// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <optional>
#include <string>

#include "revalign/scorer.hpp"

namespace revalign {

inline constexpr const char* kScoringApiKeyEnv = "SCORING_API_KEY";

struct RemoteScorerConfig {
  /// Full URL of a chat-completions style endpoint.
  std::string endpoint;
  std::string model = "gpt-4o-mini";
  std::string api_key;
  double temperature = 0.0;
  /// Attempts per request for connection failures, 429 and 5xx.
  int transport_attempts = 3;
  Backoff backoff;
};

/// Value of SCORING_API_KEY, if set and non-empty.
std::optional<std::string> scoring_api_key_from_env();

/// POSTs `{"model", "temperature", "messages": [{"role": "user", ...}]}` with
/// a bearer token and returns `choices[0].message.content`.
class RemoteScorer final : public Scorer {
 public:
  /// Throws AuthError when no API key is configured and ConfigError for a
  /// bad endpoint, before any request is made.
  explicit RemoteScorer(RemoteScorerConfig config);

  std::string id() const override;
  std::string respond(const ScoreRequest& request) override;

 private:
  RemoteScorerConfig config_;
  std::string origin_;
  std::string path_;
};

}  // namespace revalign
