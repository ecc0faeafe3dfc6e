// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "http_client.hpp"

#include <thread>

#include "httplib.h"
#include "revalign/errors.hpp"

namespace revalign::detail {

Endpoint parse_endpoint(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) throw ConfigError("endpoint is not a URL: " + std::string(url));
  const auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw ConfigError("unsupported endpoint scheme: " + std::string(url));
  const auto host_start = scheme_end + 3;
  const auto path_start = url.find('/', host_start);
  Endpoint ep;
  ep.origin = std::string(url.substr(0, path_start));
  if (ep.origin.size() == host_start) throw ConfigError("endpoint has no host: " + std::string(url));
  ep.path = path_start == std::string_view::npos ? "/" : std::string(url.substr(path_start));
  while (ep.path.size() > 1 && ep.path.back() == '/') ep.path.pop_back();
  return ep;
}

HttpResponse send_with_retry(const std::string& origin,
                             const std::function<bool(httplib::Client&, HttpResponse&)>& call,
                             const RetryPolicy& policy, std::string_view what) {
  std::string last_failure = "no attempt made";
  bool last_was_rate_limit = false;
  for (int attempt = 0; attempt < policy.attempts; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(policy.backoff.delay(attempt - 1));
    httplib::Client client(origin);
    client.set_connection_timeout(std::chrono::seconds{10});
    client.set_read_timeout(std::chrono::seconds{120});
    HttpResponse response;
    if (!call(client, response)) {
      last_failure = "connection failed";
      last_was_rate_limit = false;
      continue;
    }
    if (response.status == 401 || response.status == 403) {
      throw AuthError(std::string(what) + ": HTTP " + std::to_string(response.status));
    }
    if (response.status == 429) {
      last_failure = "HTTP 429";
      last_was_rate_limit = true;
      continue;
    }
    if (response.status >= 500) {
      last_failure = "HTTP " + std::to_string(response.status);
      last_was_rate_limit = false;
      continue;
    }
    return response;
  }
  const auto message = std::string(what) + ": giving up after " + std::to_string(policy.attempts) +
                       " attempts (" + last_failure + ")";
  if (last_was_rate_limit) throw RateLimitExceeded(message);
  throw TransportError(message);
}

}  // namespace revalign::detail
