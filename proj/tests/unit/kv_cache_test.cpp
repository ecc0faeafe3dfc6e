// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include <gtest/gtest.h>

#include <fstream>
#include <thread>

#include "revalign/kv_cache.hpp"
#include "support/temp_dir.hpp"

namespace revalign {
namespace {

using namespace std::chrono_literals;

TEST(KeyValueCache, PersistsAcrossInstances) {
  testing::TempDir dir;
  {
    KeyValueCache c(dir / "c.jsonl");
    c.put("k1", "v1");
    c.put("k2", "v2");
    c.put("k1", "v1b");
  }
  KeyValueCache c(dir / "c.jsonl");
  EXPECT_EQ(c.get("k1"), "v1b");
  EXPECT_EQ(c.get("k2"), "v2");
  EXPECT_EQ(c.size(), 2u);
}

TEST(KeyValueCache, TornTrailingLineIsIgnored) {
  testing::TempDir dir;
  {
    KeyValueCache c(dir / "c.jsonl");
    c.put("good", "1");
  }
  {
    std::ofstream out(dir / "c.jsonl", std::ios::app);
    out << "{\"k\":\"bad\",\"t\":17";
  }
  KeyValueCache c(dir / "c.jsonl");
  EXPECT_EQ(c.get("good"), "1");
  EXPECT_FALSE(c.get("bad"));
  c.put("after", "2");
  KeyValueCache reread(dir / "c.jsonl");
  EXPECT_EQ(reread.get("after"), "2");
}

TEST(KeyValueCache, TtlExpiresEntries) {
  KeyValueCache c("", 3600s);
  const auto t0 = now_seconds();
  c.put("k", "v", t0);
  EXPECT_EQ(c.get("k", t0 + 3599s), "v");
  EXPECT_FALSE(c.get("k", t0 + 3601s));
}

TEST(KeyValueCache, InMemoryWithoutPath) {
  KeyValueCache c;
  c.put("a", "b");
  EXPECT_EQ(c.get("a"), "b");
  EXPECT_TRUE(c.path().empty());
}

TEST(KeyValueCache, ConcurrentWritersAndReaders) {
  testing::TempDir dir;
  KeyValueCache c(dir / "c.jsonl");
  std::vector<std::jthread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&c, t] {
      for (int i = 0; i < 200; ++i) {
        const auto key = std::to_string(t) + ":" + std::to_string(i);
        c.put(key, key);
        EXPECT_EQ(c.get(key), key);
      }
    });
  }
  threads.clear();
  EXPECT_EQ(c.size(), 1600u);
  KeyValueCache reread(dir / "c.jsonl");
  EXPECT_EQ(reread.size(), 1600u);
}

}  // namespace
}  // namespace revalign
