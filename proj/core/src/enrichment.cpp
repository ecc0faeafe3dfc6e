// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/enrichment.hpp"

#include <atomic>
#include <thread>

#include "json.hpp"
#include "revalign/errors.hpp"

namespace revalign {

using nlohmann::json;

namespace {

std::string key(const std::string& provider_id, const char* kind, const std::string& doi) {
  return provider_id + "|" + kind + "|" + doi;
}

std::int64_t epoch(Timestamp t) { return t.time_since_epoch().count(); }
Timestamp from_epoch(std::int64_t s) { return Timestamp{std::chrono::seconds{s}}; }

template <typename Record, typename Provider, typename Lookup, typename Get, typename Put>
std::optional<Record> cached_lookup(Provider& provider, const std::string& doi, EnrichmentCache* cache, Get get,
                                    Put put, Lookup lookup) {
  const auto id = provider.id();
  if (cache) {
    if (auto hit = (cache->*get)(id, doi)) return *hit;
  }
  auto record = lookup(provider, doi);
  if (cache) (cache->*put)(id, doi, record);
  return record;
}

}  // namespace

std::optional<std::optional<CitationRecord>> EnrichmentCache::citation(const std::string& provider_id,
                                                                       const std::string& doi) const {
  const auto hit = store_.get(key(provider_id, "citations", doi));
  if (!hit) return std::nullopt;
  const json v = json::parse(*hit, nullptr, false);
  if (v.is_discarded() || !v.is_object()) return std::nullopt;
  if (!v.value("found", false)) return std::optional<CitationRecord>{};
  return std::optional<CitationRecord>{CitationRecord{doi, v.at("citations").get<std::int64_t>(),
                                                      v.at("source").get<std::string>(),
                                                      from_epoch(v.at("retrieved_at").get<std::int64_t>())}};
}

std::optional<std::optional<AltmetricRecord>> EnrichmentCache::altmetric(const std::string& provider_id,
                                                                         const std::string& doi) const {
  const auto hit = store_.get(key(provider_id, "altmetrics", doi));
  if (!hit) return std::nullopt;
  const json v = json::parse(*hit, nullptr, false);
  if (v.is_discarded() || !v.is_object()) return std::nullopt;
  if (!v.value("found", false)) return std::optional<AltmetricRecord>{};
  return std::optional<AltmetricRecord>{AltmetricRecord{
      doi, v.at("aas").get<double>(), v.at("news_mentions").get<std::int64_t>(),
      v.at("mendeley_readers").get<std::int64_t>(), v.at("source").get<std::string>(),
      from_epoch(v.at("retrieved_at").get<std::int64_t>())}};
}

void EnrichmentCache::put_citation(const std::string& provider_id, const std::string& doi,
                                   const std::optional<CitationRecord>& record) {
  json v = {{"found", record.has_value()}};
  if (record) {
    v["citations"] = record->citations;
    v["source"] = record->source;
    v["retrieved_at"] = epoch(record->retrieved_at);
  }
  store_.put(key(provider_id, "citations", doi), v.dump());
}

void EnrichmentCache::put_altmetric(const std::string& provider_id, const std::string& doi,
                                    const std::optional<AltmetricRecord>& record) {
  json v = {{"found", record.has_value()}};
  if (record) {
    v["aas"] = record->aas;
    v["news_mentions"] = record->news_mentions;
    v["mendeley_readers"] = record->mendeley_readers;
    v["source"] = record->source;
    v["retrieved_at"] = epoch(record->retrieved_at);
  }
  store_.put(key(provider_id, "altmetrics", doi), v.dump());
}

std::vector<EnrichedArticle> enrich(const Corpus& corpus, const std::map<std::string, std::optional<double>>& mean_ks,
                                    const std::map<std::string, AlphaResult>& alphas, const Providers& providers,
                                    EnrichmentCache* cache, const EnrichOptions& options) {
  if (options.concurrency < 1) throw ConfigError("enrichment concurrency must be at least 1");

  std::vector<EnrichedArticle> out;
  out.reserve(corpus.articles.size());
  for (const auto& article : corpus.articles) {
    EnrichedArticle e;
    e.article = article;
    if (const auto it = mean_ks.find(article.article_id); it != mean_ks.end()) e.mean_k = it->second;
    if (e.mean_k && !(*e.mean_k >= 0.0 && *e.mean_k <= 1.0)) {
      throw OutOfRange("mean K of " + article.article_id + " outside [0, 1]");
    }
    if (const auto it = alphas.find(article.article_id); it != alphas.end()) e.alpha = it->second;
    out.push_back(std::move(e));
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].article.doi) pending.push_back(i);
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto k = next.fetch_add(1); k < pending.size(); k = next.fetch_add(1)) {
      auto& e = out[pending[k]];
      const auto& doi = *e.article.doi;
      if (providers.citations) {
        try {
          e.citation = cached_lookup<CitationRecord>(
              *providers.citations, doi, cache, &EnrichmentCache::citation, &EnrichmentCache::put_citation,
              [](CitationProvider& p, const std::string& d) { return lookup_citations(p, d); });
        } catch (const std::exception& ex) {
          e.errors.push_back(std::string("citations: ") + ex.what());
        }
      }
      if (providers.altmetrics) {
        try {
          e.altmetric = cached_lookup<AltmetricRecord>(
              *providers.altmetrics, doi, cache, &EnrichmentCache::altmetric, &EnrichmentCache::put_altmetric,
              [](AltmetricProvider& p, const std::string& d) { return lookup_altmetrics(p, d); });
        } catch (const std::exception& ex) {
          e.errors.push_back(std::string("altmetrics: ") + ex.what());
        }
      }
    }
  };

  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(options.concurrency), pending.size());
  std::vector<std::jthread> pool;
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  pool.clear();
  return out;
}

}  // namespace revalign
