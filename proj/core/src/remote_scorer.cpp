// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/remote_scorer.hpp"

#include <cstdlib>

#include "http_client.hpp"
#include "httplib.h"
#include "json.hpp"
#include "revalign/errors.hpp"

namespace revalign {

using nlohmann::json;

std::optional<std::string> scoring_api_key_from_env() {
  const char* key = std::getenv(kScoringApiKeyEnv);
  if (key == nullptr || *key == '\0') return std::nullopt;
  return std::string(key);
}

RemoteScorer::RemoteScorer(RemoteScorerConfig config) : config_(std::move(config)) {
  if (config_.api_key.empty()) {
    throw AuthError(std::string("remote scorer needs an API key; set ") + kScoringApiKeyEnv);
  }
  if (config_.endpoint.empty()) throw ConfigError("remote scorer needs scorer.endpoint");
  const auto ep = detail::parse_endpoint(config_.endpoint);
  origin_ = ep.origin;
  path_ = ep.path;
}

std::string RemoteScorer::id() const { return "remote:" + config_.model; }

std::string RemoteScorer::respond(const ScoreRequest& request) {
  const json body = {{"model", config_.model},
                     {"temperature", config_.temperature},
                     {"messages", json::array({{{"role", "user"}, {"content", std::string(request.prompt)}}})}};
  const auto payload = body.dump(-1, ' ', false, json::error_handler_t::replace);
  const httplib::Headers headers = {{"Authorization", "Bearer " + config_.api_key}};

  const auto response = detail::send_with_retry(
      origin_,
      [&](httplib::Client& client, detail::HttpResponse& out) {
        auto res = client.Post(path_, headers, payload, "application/json");
        if (!res) return false;
        out.status = res->status;
        out.body = res->body;
        return true;
      },
      detail::RetryPolicy{config_.transport_attempts, config_.backoff}, "scorer request");

  if (response.status != 200) {
    throw TransportError("scorer request: HTTP " + std::to_string(response.status));
  }
  const json envelope = json::parse(response.body, nullptr, false);
  if (envelope.is_discarded() || !envelope.is_object()) throw MalformedResponse("scorer reply is not a JSON object");
  const auto choices = envelope.find("choices");
  if (choices == envelope.end() || !choices->is_array() || choices->empty()) {
    throw MalformedResponse("scorer reply has no choices");
  }
  const auto& first = choices->front();
  if (!first.is_object() || !first.contains("message") || !first["message"].is_object() ||
      !first["message"].contains("content") || !first["message"]["content"].is_string()) {
    throw MalformedResponse("scorer reply has no message content");
  }
  return first["message"]["content"].get<std::string>();
}

}  // namespace revalign
