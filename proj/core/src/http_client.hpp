// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

// Internal HTTP helpers shared by the remote scorer and the HTTP providers.

#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "revalign/scorer.hpp"

namespace httplib {
class Client;
}

namespace revalign::detail {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;    // begins with '/', no trailing slash unless root
};

/// Throws ConfigError for anything that is not an http(s) URL.
Endpoint parse_endpoint(std::string_view url);

struct HttpResponse {
  int status = 0;
  std::string body;
};

struct RetryPolicy {
  int attempts = 3;
  Backoff backoff;
};

/// Runs `call` until it yields a response that is neither a connection
/// failure, 429, nor 5xx, sleeping per `policy` in between. 401/403 throw
/// AuthError at once. Exhaustion throws RateLimitExceeded (last failure 429)
/// or TransportError.
HttpResponse send_with_retry(const std::string& origin, const std::function<bool(httplib::Client&, HttpResponse&)>& call,
                             const RetryPolicy& policy, std::string_view what);

}  // namespace revalign::detail
