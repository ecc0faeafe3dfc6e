// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "revalign/rate_limiter.hpp"
#include "revalign/scorer.hpp"
#include "revalign/text.hpp"

namespace revalign {

struct CitationRecord {
  std::string doi;
  std::int64_t citations = 0;
  std::string source;
  Timestamp retrieved_at{};

  friend bool operator==(const CitationRecord&, const CitationRecord&) = default;
};

struct AltmetricRecord {
  std::string doi;
  double aas = 0.0;  // Altmetric Attention Score
  std::int64_t news_mentions = 0;
  std::int64_t mendeley_readers = 0;
  std::string source;
  Timestamp retrieved_at{};

  friend bool operator==(const AltmetricRecord&, const AltmetricRecord&) = default;
};

/// Lookups take normalized DOIs and may be called from several threads.
/// No record means the source does not know the DOI.
class CitationProvider {
 public:
  virtual ~CitationProvider() = default;
  virtual std::string id() const = 0;
  virtual std::optional<CitationRecord> lookup_citations(const std::string& doi) = 0;
};

class AltmetricProvider {
 public:
  virtual ~AltmetricProvider() = default;
  virtual std::string id() const = 0;
  virtual std::optional<AltmetricRecord> lookup_altmetrics(const std::string& doi) = 0;
};

/// Checks the DOI precondition (std::invalid_argument) and forwards.
std::optional<CitationRecord> lookup_citations(CitationProvider& provider, const std::string& doi);
std::optional<AltmetricRecord> lookup_altmetrics(AltmetricProvider& provider, const std::string& doi);

/// Citation counts from a CSV with header `doi,citations`. DOIs are
/// normalized on load; negative counts, duplicates and unparsable rows throw
/// SchemaError.
class FixtureCitationProvider final : public CitationProvider {
 public:
  static FixtureCitationProvider load(const std::filesystem::path& path);
  static FixtureCitationProvider from_csv(std::string_view text, std::string label);

  std::string id() const override { return "fixture:" + label_; }
  std::optional<CitationRecord> lookup_citations(const std::string& doi) override;
  std::size_t size() const noexcept { return counts_.size(); }

 private:
  std::string label_;
  std::unordered_map<std::string, std::int64_t> counts_;
};

/// Altmetric indicators from a CSV with header
/// `doi,aas,news_mentions,mendeley_readers`; same validation rules.
class FixtureAltmetricProvider final : public AltmetricProvider {
 public:
  static FixtureAltmetricProvider load(const std::filesystem::path& path);
  static FixtureAltmetricProvider from_csv(std::string_view text, std::string label);

  std::string id() const override { return "fixture:" + label_; }
  std::optional<AltmetricRecord> lookup_altmetrics(const std::string& doi) override;
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  struct Row {
    double aas;
    std::int64_t news_mentions;
    std::int64_t mendeley_readers;
  };
  std::string label_;
  std::unordered_map<std::string, Row> rows_;
};

inline constexpr const char* kEnrichApiTokenEnv = "ENRICH_API_TOKEN";

std::optional<std::string> enrich_api_token_from_env();

struct HttpProviderConfig {
  /// Base URL; lookups GET `<endpoint>/<doi>`.
  std::string endpoint;
  std::string token;
  double requests_per_second = 5.0;
  /// Attempts per lookup for connection failures, 429 and 5xx.
  int attempts = 3;
  Backoff backoff;
};

/// Client for a DOI-keyed indicator service. The response for a known DOI is
/// a JSON object holding any of `citations`, `aas`, `news_mentions`,
/// `mendeley_readers`; 404 means unknown. A citation record needs
/// `citations`, an altmetric record needs `aas` (the counts default to 0).
/// All lookups share one token bucket.
class HttpProvider final : public CitationProvider, public AltmetricProvider {
 public:
  /// Throws AuthError without a token and ConfigError for a bad endpoint.
  explicit HttpProvider(HttpProviderConfig config);

  std::string id() const override;
  std::optional<CitationRecord> lookup_citations(const std::string& doi) override;
  std::optional<AltmetricRecord> lookup_altmetrics(const std::string& doi) override;

 private:
  /// Parsed body, or nullopt on 404.
  std::optional<std::string> fetch(const std::string& doi);

  HttpProviderConfig config_;
  std::string origin_;
  std::string path_;
  std::unique_ptr<TokenBucket> limiter_;
};

}  // namespace revalign
