// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/rate_limiter.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace revalign {

TokenBucket::TokenBucket(double rate, double burst) : rate_(rate), burst_(burst), tokens_(burst), last_(Clock::now()) {
  if (!(rate > 0.0) || !(burst >= 1.0)) throw std::invalid_argument("token bucket needs rate > 0 and burst >= 1");
}

void TokenBucket::refill(Clock::time_point now) {
  const std::chrono::duration<double> elapsed = now - last_;
  tokens_ = std::min(burst_, tokens_ + elapsed.count() * rate_);
  last_ = now;
}

void TokenBucket::acquire() {
  std::chrono::duration<double> wait{0.0};
  {
    std::lock_guard lock(mutex_);
    refill(Clock::now());
    tokens_ -= 1.0;
    if (tokens_ < 0.0) wait = std::chrono::duration<double>(-tokens_ / rate_);
  }
  if (wait.count() > 0.0) std::this_thread::sleep_for(wait);
}

bool TokenBucket::try_acquire() {
  std::lock_guard lock(mutex_);
  refill(Clock::now());
  if (tokens_ < 1.0) return false;
  tokens_ -= 1.0;
  return true;
}

}  // namespace revalign
