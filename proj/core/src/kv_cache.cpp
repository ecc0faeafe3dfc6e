// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/kv_cache.hpp"

#include <mutex>
#include <sstream>

#include "json.hpp"
#include "revalign/errors.hpp"

namespace revalign {

using nlohmann::json;

KeyValueCache::KeyValueCache(std::filesystem::path path, Ttl ttl) : path_(std::move(path)), ttl_(ttl) {
  if (path_.empty()) return;
  if (path_.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
  }
  bool torn_tail = false;
  if (std::filesystem::exists(path_)) {
    const auto content = read_file(path_);
    torn_tail = !content.empty() && content.back() != '\n';
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
      if (trim(line).empty()) continue;
      const json record = json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.is_object() || !record.contains("k") || !record.contains("t") ||
          !record.contains("v") || !record["k"].is_string() || !record["v"].is_string() ||
          !record["t"].is_number_integer()) {
        continue;
      }
      entries_[record["k"].get<std::string>()] =
          Entry{record["v"].get<std::string>(), Timestamp{std::chrono::seconds{record["t"].get<std::int64_t>()}}};
    }
  }
  log_.open(path_, std::ios::binary | std::ios::app);
  if (!log_) throw IoError("cannot open cache file " + path_.string());
  if (torn_tail) log_ << '\n';
}

std::optional<std::string> KeyValueCache::get(const std::string& key, Timestamp now) const {
  std::shared_lock lock(mutex_);
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  if (ttl_ && now - it->second.stored_at >= *ttl_) return std::nullopt;
  return it->second.value;
}

void KeyValueCache::put(const std::string& key, const std::string& value, Timestamp stored_at) {
  std::unique_lock lock(mutex_);
  entries_[key] = Entry{value, stored_at};
  if (!log_.is_open()) return;
  const json record = {{"k", key}, {"t", stored_at.time_since_epoch().count()}, {"v", value}};
  log_ << record.dump() << '\n';
  log_.flush();
  if (!log_) throw IoError("cannot append to cache file " + path_.string());
}

std::size_t KeyValueCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace revalign
