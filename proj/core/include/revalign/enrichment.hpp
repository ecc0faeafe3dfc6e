// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revalign/agreement.hpp"
#include "revalign/corpus.hpp"
#include "revalign/kv_cache.hpp"
#include "revalign/providers.hpp"

namespace revalign {

struct EnrichedArticle {
  RicArticle article;
  std::optional<double> mean_k;
  AlphaResult alpha;
  std::optional<CitationRecord> citation;
  std::optional<AltmetricRecord> altmetric;
  /// Provider failures for this article; the other fields are still filled.
  std::vector<std::string> errors;
};

/// Lookup results, found or not, keyed by (provider id, kind, DOI).
class EnrichmentCache {
 public:
  static constexpr std::chrono::seconds kDefaultTtl = std::chrono::hours{24 * 30};

  /// In-memory only.
  EnrichmentCache() = default;
  explicit EnrichmentCache(std::filesystem::path path, std::chrono::seconds ttl = kDefaultTtl)
      : store_(std::move(path), ttl) {}

  /// Outer optional: cache hit. Inner optional: the provider knew the DOI.
  std::optional<std::optional<CitationRecord>> citation(const std::string& provider_id, const std::string& doi) const;
  std::optional<std::optional<AltmetricRecord>> altmetric(const std::string& provider_id,
                                                          const std::string& doi) const;
  void put_citation(const std::string& provider_id, const std::string& doi,
                    const std::optional<CitationRecord>& record);
  void put_altmetric(const std::string& provider_id, const std::string& doi,
                     const std::optional<AltmetricRecord>& record);

 private:
  KeyValueCache store_;
};

struct Providers {
  CitationProvider* citations = nullptr;
  AltmetricProvider* altmetrics = nullptr;
};

struct EnrichOptions {
  /// Articles looked up at the same time; each article's lookups run in sequence.
  int concurrency = 4;
};

/// Joins corpus articles with their mean K score, alpha and impact records,
/// in corpus order. Articles without a DOI get no records. Provider errors
/// are recorded on the affected article and never abort the batch.
/// Throws OutOfRange for a mean_k outside [0, 1].
std::vector<EnrichedArticle> enrich(const Corpus& corpus, const std::map<std::string, std::optional<double>>& mean_ks,
                                    const std::map<std::string, AlphaResult>& alphas, const Providers& providers,
                                    EnrichmentCache* cache, const EnrichOptions& options = {});

}  // namespace revalign
