// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "revalign/text.hpp"

namespace revalign {

/// Persistent string-to-string store backed by an append-only JSON-lines file.
///
/// Every put appends one line and flushes, so a crash loses at most the line
/// being written; a torn trailing line is ignored on reload and the last
/// complete entry for a key wins. Readers share a lock, writers serialize.
/// An empty path gives a purely in-memory cache.
class KeyValueCache {
 public:
  using Ttl = std::optional<std::chrono::seconds>;

  KeyValueCache() = default;
  explicit KeyValueCache(std::filesystem::path path, Ttl ttl = std::nullopt);

  KeyValueCache(const KeyValueCache&) = delete;
  KeyValueCache& operator=(const KeyValueCache&) = delete;

  /// Entries older than the TTL (relative to `now`) read as absent.
  std::optional<std::string> get(const std::string& key, Timestamp now = now_seconds()) const;
  void put(const std::string& key, const std::string& value, Timestamp stored_at = now_seconds());

  std::size_t size() const;
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  struct Entry {
    std::string value;
    Timestamp stored_at;
  };

  std::filesystem::path path_;
  Ttl ttl_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Entry> entries_;
  std::ofstream log_;
};

}  // namespace revalign
