// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "http_client.hpp"
#include "httplib.h"
#include "json.hpp"
#include "revalign/errors.hpp"
#include "revalign/providers.hpp"

namespace revalign {

using nlohmann::json;

namespace {

std::string encode_path_segment(std::string_view doi) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : doi) {
    if (std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~' || c == '/') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0x0f]);
    }
  }
  return out;
}

json parse_object(const std::string& body, const std::string& doi) {
  json obj = json::parse(body, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) throw SchemaError("indicator service: reply for " + doi + " is not an object");
  return obj;
}

std::int64_t count_member(const json& obj, const char* key, const std::string& doi) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return 0;
  if (!it->is_number_integer() || it->get<std::int64_t>() < 0) {
    throw SchemaError(std::string("indicator service: ") + key + " for " + doi + " must be a non-negative integer");
  }
  return it->get<std::int64_t>();
}

}  // namespace

std::optional<std::string> enrich_api_token_from_env() {
  const char* token = std::getenv(kEnrichApiTokenEnv);
  if (token == nullptr || *token == '\0') return std::nullopt;
  return std::string(token);
}

HttpProvider::HttpProvider(HttpProviderConfig config) : config_(std::move(config)) {
  if (config_.token.empty()) {
    throw AuthError(std::string("HTTP provider needs a token; set ") + kEnrichApiTokenEnv);
  }
  if (config_.endpoint.empty()) throw ConfigError("HTTP provider needs provider.endpoint");
  const auto ep = detail::parse_endpoint(config_.endpoint);
  origin_ = ep.origin;
  path_ = ep.path == "/" ? "" : ep.path;
  limiter_ = std::make_unique<TokenBucket>(config_.requests_per_second);
}

std::string HttpProvider::id() const { return "http:" + config_.endpoint; }

std::optional<std::string> HttpProvider::fetch(const std::string& doi) {
  const auto target = path_ + "/" + encode_path_segment(doi);
  const httplib::Headers headers = {{"Authorization", "Bearer " + config_.token}, {"Accept", "application/json"}};
  const auto response = detail::send_with_retry(
      origin_,
      [&](httplib::Client& client, detail::HttpResponse& out) {
        limiter_->acquire();
        auto res = client.Get(target, headers);
        if (!res) return false;
        out.status = res->status;
        out.body = res->body;
        return true;
      },
      detail::RetryPolicy{config_.attempts, config_.backoff}, "indicator lookup for " + doi);
  if (response.status == 404) return std::nullopt;
  if (response.status != 200) {
    throw TransportError("indicator lookup for " + doi + ": HTTP " + std::to_string(response.status));
  }
  return response.body;
}

std::optional<CitationRecord> HttpProvider::lookup_citations(const std::string& doi) {
  const auto body = fetch(doi);
  if (!body) return std::nullopt;
  const auto obj = parse_object(*body, doi);
  if (!obj.contains("citations") || obj["citations"].is_null()) return std::nullopt;
  return CitationRecord{doi, count_member(obj, "citations", doi), id(), now_seconds()};
}

std::optional<AltmetricRecord> HttpProvider::lookup_altmetrics(const std::string& doi) {
  const auto body = fetch(doi);
  if (!body) return std::nullopt;
  const auto obj = parse_object(*body, doi);
  const auto aas = obj.find("aas");
  if (aas == obj.end() || aas->is_null()) return std::nullopt;
  if (!aas->is_number() || !std::isfinite(aas->get<double>()) || aas->get<double>() < 0.0) {
    throw SchemaError("indicator service: aas for " + doi + " must be a non-negative number");
  }
  return AltmetricRecord{doi,
                         aas->get<double>(),
                         count_member(obj, "news_mentions", doi),
                         count_member(obj, "mendeley_readers", doi),
                         id(),
                         now_seconds()};
}

}  // namespace revalign
