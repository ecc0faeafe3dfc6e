// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include <gtest/gtest.h>

#include <thread>

#include "revalign/rate_limiter.hpp"

namespace revalign {
namespace {

using namespace std::chrono_literals;
using Clock = std::chrono::steady_clock;

TEST(TokenBucket, BurstThenPaced) {
  TokenBucket bucket(50.0, 3.0);
  EXPECT_TRUE(bucket.try_acquire());
  EXPECT_TRUE(bucket.try_acquire());
  EXPECT_TRUE(bucket.try_acquire());
  EXPECT_FALSE(bucket.try_acquire());
  std::this_thread::sleep_for(30ms);
  EXPECT_TRUE(bucket.try_acquire());
}

TEST(TokenBucket, AcquireEnforcesRateAcrossThreads) {
  TokenBucket bucket(100.0, 1.0);
  const auto start = Clock::now();
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 4; ++t) {
      threads.emplace_back([&] {
        for (int i = 0; i < 5; ++i) bucket.acquire();
      });
    }
  }
  const auto elapsed = Clock::now() - start;
  // 20 tokens at 100/s with one in the bucket: at least 190 ms.
  EXPECT_GE(elapsed, 185ms);
  EXPECT_LT(elapsed, 1000ms);
}

TEST(TokenBucket, RejectsBadRate) {
  EXPECT_THROW(TokenBucket(0.0), std::invalid_argument);
  EXPECT_THROW(TokenBucket(1.0, 0.5), std::invalid_argument);
}

}  // namespace
}  // namespace revalign
