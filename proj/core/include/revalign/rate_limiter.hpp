// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <chrono>
#include <mutex>

namespace revalign {

/// Token bucket shared between threads. acquire() reserves a token and sleeps
/// until it is due, so callers are served in arrival order.
class TokenBucket {
 public:
  using Clock = std::chrono::steady_clock;

  /// `rate` tokens per second, holding at most `burst` tokens.
  explicit TokenBucket(double rate, double burst = 1.0);

  void acquire();
  bool try_acquire();

  double rate() const noexcept { return rate_; }

 private:
  void refill(Clock::time_point now);

  double rate_;
  double burst_;
  double tokens_;
  Clock::time_point last_;
  std::mutex mutex_;
};

}  // namespace revalign
