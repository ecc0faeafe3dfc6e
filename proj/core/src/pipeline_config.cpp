// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/pipeline_config.hpp"

#include <charconv>
#include <functional>
#include <map>

#include "revalign/errors.hpp"
#include "revalign/hash.hpp"
#include "revalign/text.hpp"

namespace revalign {

namespace {

template <typename T>
T parse_number(const std::string& key, const std::string& raw) {
  T v{};
  const auto s = trim(raw);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ConfigError(key + ": not a number: " + raw);
  return v;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& raw) {
  if (raw.empty()) return {};
  std::filesystem::path p(raw);
  return p.is_absolute() || base.empty() ? p : base / p;
}

void require_file(const std::filesystem::path& p, const char* what) {
  if (!std::filesystem::is_regular_file(p)) throw ConfigError(std::string(what) + " not found: " + p.string());
}

}  // namespace

PipelineConfig PipelineConfig::from_kv(const KeyValueConfig& kv, const std::filesystem::path& base_dir) {
  PipelineConfig c;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"paths.corpus", [&](auto&, auto& v) { c.corpus = resolve(base_dir, v); }},
      {"paths.scores", [&](auto&, auto& v) { c.scores = resolve(base_dir, v); }},
      {"paths.cache_dir", [&](auto&, auto& v) { c.cache_dir = resolve(base_dir, v); }},
      {"paths.out_dir", [&](auto&, auto& v) { c.out_dir = resolve(base_dir, v); }},
      {"paths.citations_fixture", [&](auto&, auto& v) { c.citations_fixture = resolve(base_dir, v); }},
      {"paths.altmetrics_fixture", [&](auto&, auto& v) { c.altmetrics_fixture = resolve(base_dir, v); }},
      {"extraction.selectors", [&](auto&, auto& v) { c.extraction_selectors = resolve(base_dir, v); }},
      {"scorer.kind",
       [&](auto& k, auto& v) {
         if (v == "mock") {
           c.scorer_kind = ScorerKind::Mock;
         } else if (v == "remote") {
           c.scorer_kind = ScorerKind::Remote;
         } else {
           throw ConfigError(k + ": expected mock or remote, got " + v);
         }
       }},
      {"scorer.model", [&](auto&, auto& v) { c.model = v; }},
      {"scorer.endpoint", [&](auto&, auto& v) { c.scorer_endpoint = v; }},
      {"scorer.runs", [&](auto& k, auto& v) { c.runs = parse_number<int>(k, v); }},
      {"scorer.concurrency", [&](auto& k, auto& v) { c.concurrency = parse_number<int>(k, v); }},
      {"scorer.retries", [&](auto& k, auto& v) { c.retries = parse_number<int>(k, v); }},
      {"scorer.backoff_ms", [&](auto& k, auto& v) { c.backoff_ms = parse_number<int>(k, v); }},
      {"scorer.seed", [&](auto& k, auto& v) { c.seed = parse_number<std::uint64_t>(k, v); }},
      {"scorer.temperature", [&](auto& k, auto& v) { c.temperature = parse_number<double>(k, v); }},
      {"provider.kind",
       [&](auto& k, auto& v) {
         if (v == "fixture") {
           c.provider_kind = ProviderKind::Fixture;
         } else if (v == "http") {
           c.provider_kind = ProviderKind::Http;
         } else if (v == "none") {
           c.provider_kind = ProviderKind::None;
         } else {
           throw ConfigError(k + ": expected fixture, http or none, got " + v);
         }
       }},
      {"provider.endpoint", [&](auto&, auto& v) { c.provider_endpoint = v; }},
      {"provider.rate", [&](auto& k, auto& v) { c.provider_rate = parse_number<double>(k, v); }},
      {"provider.concurrency", [&](auto& k, auto& v) { c.provider_concurrency = parse_number<int>(k, v); }},
      {"provider.ttl_days", [&](auto& k, auto& v) { c.cache_ttl_days = parse_number<int>(k, v); }},
      {"analysis.metric",
       [&](auto& k, auto& v) {
         if (v == "interval") {
           c.metric = Metric::Interval;
         } else if (v == "nominal") {
           c.metric = Metric::Nominal;
         } else {
           throw ConfigError(k + ": expected interval or nominal, got " + v);
         }
       }},
      {"corpus.min_statement_chars",
       [&](auto& k, auto& v) { c.min_statement_chars = parse_number<std::size_t>(k, v); }},
      {"report.formats",
       [&](auto& k, auto& v) {
         c.formats.clear();
         for (const auto& part : split(v, ',')) {
           const std::string f(trim(part));
           if (f != "csv" && f != "md") throw ConfigError(k + ": unknown format " + f);
           c.formats.insert(f);
         }
       }},
  };
  for (const auto& [key, value] : kv.entries()) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown config key " + key);
    it->second(key, value);
  }
  return c;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  return from_kv(KeyValueConfig::load(path), path.parent_path());
}

void PipelineConfig::validate() const {
  if (runs < 1) throw ConfigError("scorer.runs must be at least 1");
  if (concurrency < 1) throw ConfigError("scorer.concurrency must be at least 1");
  if (provider_concurrency < 1) throw ConfigError("provider.concurrency must be at least 1");
  if (retries < 0) throw ConfigError("scorer.retries must not be negative");
  if (backoff_ms < 0) throw ConfigError("scorer.backoff_ms must not be negative");
  if (!(provider_rate > 0.0)) throw ConfigError("provider.rate must be positive");
  if (cache_ttl_days < 1) throw ConfigError("provider.ttl_days must be at least 1");
  if (formats.empty()) throw ConfigError("report.formats must name csv and/or md");
  if (corpus.empty()) throw ConfigError("paths.corpus is required");
  require_file(corpus, "corpus");
  if (provider_kind == ProviderKind::Fixture) {
    if (!citations_fixture.empty()) require_file(citations_fixture, "citation fixture");
    if (!altmetrics_fixture.empty()) require_file(altmetrics_fixture, "altmetric fixture");
  }
  if (provider_kind == ProviderKind::Http && provider_endpoint.empty()) {
    throw ConfigError("provider.kind = http needs provider.endpoint");
  }
  if (scorer_kind == ScorerKind::Remote && scorer_endpoint.empty()) {
    throw ConfigError("scorer.kind = remote needs scorer.endpoint");
  }
}

std::string PipelineConfig::canonical() const {
  std::string formats_joined;
  for (const auto& f : formats) formats_joined += (formats_joined.empty() ? "" : ",") + f;
  const std::pair<const char*, std::string> fields[] = {
      {"paths.corpus", corpus.string()},
      {"paths.scores", scores_path().string()},
      {"paths.cache_dir", cache_path().string()},
      {"paths.out_dir", out_dir.string()},
      {"paths.citations_fixture", citations_fixture.string()},
      {"paths.altmetrics_fixture", altmetrics_fixture.string()},
      {"extraction.selectors", extraction_selectors.string()},
      {"scorer.kind", scorer_kind == ScorerKind::Mock ? "mock" : "remote"},
      {"scorer.model", model},
      {"scorer.endpoint", scorer_endpoint},
      {"scorer.runs", std::to_string(runs)},
      {"scorer.concurrency", std::to_string(concurrency)},
      {"scorer.retries", std::to_string(retries)},
      {"scorer.backoff_ms", std::to_string(backoff_ms)},
      {"scorer.seed", std::to_string(seed)},
      {"scorer.temperature", format_fixed(temperature, 6)},
      {"provider.kind",
       provider_kind == ProviderKind::Fixture ? "fixture" : provider_kind == ProviderKind::Http ? "http" : "none"},
      {"provider.endpoint", provider_endpoint},
      {"provider.rate", format_fixed(provider_rate, 6)},
      {"provider.concurrency", std::to_string(provider_concurrency)},
      {"provider.ttl_days", std::to_string(cache_ttl_days)},
      {"analysis.metric", std::string(metric_name(metric))},
      {"corpus.min_statement_chars", std::to_string(min_statement_chars)},
      {"report.formats", formats_joined},
  };
  std::string out;
  for (const auto& [k, v] : fields) out += std::string(k) + "=" + v + "\n";
  return out;
}

std::string PipelineConfig::hash() const { return sha256_hex(canonical()); }

}  // namespace revalign
