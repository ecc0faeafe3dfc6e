// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>

#include "revalign/agreement.hpp"
#include "revalign/kv_config.hpp"

namespace revalign {

enum class ScorerKind { Mock, Remote };
enum class ProviderKind { Fixture, Http, None };

/// Everything a pipeline run depends on. Loaded from a key = value file;
/// relative paths resolve against the file's directory.
///
///   paths.corpus  paths.scores  paths.cache_dir  paths.out_dir
///   paths.citations_fixture  paths.altmetrics_fixture  extraction.selectors
///   scorer.kind (mock|remote)  scorer.model  scorer.endpoint  scorer.runs
///   scorer.concurrency  scorer.retries  scorer.backoff_ms  scorer.seed
///   scorer.temperature
///   provider.kind (fixture|http|none)  provider.endpoint  provider.rate
///   provider.concurrency  provider.ttl_days
///   analysis.metric (interval|nominal)  corpus.min_statement_chars
///   report.formats (comma-separated subset of csv,md)
struct PipelineConfig {
  std::filesystem::path corpus;
  std::filesystem::path scores;     // default <out_dir>/scores.jsonl
  std::filesystem::path cache_dir;  // default <out_dir>/cache
  std::filesystem::path out_dir = "report";
  std::filesystem::path citations_fixture;
  std::filesystem::path altmetrics_fixture;
  std::filesystem::path extraction_selectors;

  ScorerKind scorer_kind = ScorerKind::Mock;
  std::string model = "gpt-4o-mini";
  std::string scorer_endpoint = "https://api.openai.com/v1/chat/completions";
  int runs = 1;
  int concurrency = 4;
  int retries = 3;
  int backoff_ms = 1000;
  std::uint64_t seed = 42;
  double temperature = 0.0;

  ProviderKind provider_kind = ProviderKind::Fixture;
  std::string provider_endpoint;
  double provider_rate = 5.0;
  int provider_concurrency = 4;
  int cache_ttl_days = 30;

  Metric metric = Metric::Interval;
  std::size_t min_statement_chars = 20;
  std::set<std::string> formats = {"csv", "md"};

  /// Throws ConfigError for unknown keys or unparsable values.
  static PipelineConfig from_kv(const KeyValueConfig& kv, const std::filesystem::path& base_dir);
  static PipelineConfig load(const std::filesystem::path& path);

  std::filesystem::path scores_path() const { return scores.empty() ? out_dir / "scores.jsonl" : scores; }
  std::filesystem::path cache_path() const { return cache_dir.empty() ? out_dir / "cache" : cache_dir; }

  /// Throws ConfigError: runs < 1, concurrency < 1, missing corpus or
  /// fixture files, http provider without endpoint.
  void validate() const;

  /// One `key=value` line per field, fixed order.
  std::string canonical() const;
  std::string hash() const;
};

}  // namespace revalign
