// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/providers.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "revalign/csv.hpp"
#include "revalign/doi.hpp"
#include "revalign/errors.hpp"

namespace revalign {

namespace {

void expect_header(const csv::Table& table, const csv::Row& expected, const std::string& label) {
  if (table.header != expected) throw SchemaError(1, label + ": expected header " + csv::join(expected));
}

std::string fixture_doi(const std::string& raw, std::size_t line, const std::string& label) {
  const auto doi = extract_doi(raw);
  if (!doi) throw SchemaError(line, label + ": not a DOI: " + raw);
  return *doi;
}

std::int64_t count_field(std::string_view raw, const char* name, std::size_t line, const std::string& label) {
  raw = trim(raw);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
    throw SchemaError(line, label + ": " + name + " is not an integer: " + std::string(raw));
  }
  if (v < 0) throw SchemaError(line, label + ": " + name + " is negative");
  return v;
}

double score_field(std::string_view raw, const char* name, std::size_t line, const std::string& label) {
  raw = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (ec != std::errc{} || ptr != raw.data() + raw.size() || !std::isfinite(v)) {
    throw SchemaError(line, label + ": " + name + " is not a number: " + std::string(raw));
  }
  if (v < 0.0) throw SchemaError(line, label + ": " + name + " is negative");
  return v;
}

void require_normalized(const std::string& doi) {
  if (!is_normalized_doi(doi)) throw std::invalid_argument("lookup needs a normalized DOI, got '" + doi + "'");
}

}  // namespace

std::optional<CitationRecord> lookup_citations(CitationProvider& provider, const std::string& doi) {
  require_normalized(doi);
  return provider.lookup_citations(doi);
}

std::optional<AltmetricRecord> lookup_altmetrics(AltmetricProvider& provider, const std::string& doi) {
  require_normalized(doi);
  return provider.lookup_altmetrics(doi);
}

FixtureCitationProvider FixtureCitationProvider::from_csv(std::string_view text, std::string label) {
  const auto table = csv::parse(text);
  expect_header(table, {"doi", "citations"}, label);
  FixtureCitationProvider p;
  p.label_ = std::move(label);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto line = table.lines[i];
    const auto doi = fixture_doi(table.rows[i][0], line, p.label_);
    const auto count = count_field(table.rows[i][1], "citations", line, p.label_);
    if (!p.counts_.emplace(doi, count).second) throw SchemaError(line, p.label_ + ": duplicate DOI " + doi);
  }
  return p;
}

FixtureCitationProvider FixtureCitationProvider::load(const std::filesystem::path& path) {
  return from_csv(read_file(path), path.filename().string());
}

std::optional<CitationRecord> FixtureCitationProvider::lookup_citations(const std::string& doi) {
  const auto it = counts_.find(doi);
  if (it == counts_.end()) return std::nullopt;
  return CitationRecord{doi, it->second, id(), now_seconds()};
}

FixtureAltmetricProvider FixtureAltmetricProvider::from_csv(std::string_view text, std::string label) {
  const auto table = csv::parse(text);
  expect_header(table, {"doi", "aas", "news_mentions", "mendeley_readers"}, label);
  FixtureAltmetricProvider p;
  p.label_ = std::move(label);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto line = table.lines[i];
    const auto& row = table.rows[i];
    const auto doi = fixture_doi(row[0], line, p.label_);
    Row r{score_field(row[1], "aas", line, p.label_), count_field(row[2], "news_mentions", line, p.label_),
          count_field(row[3], "mendeley_readers", line, p.label_)};
    if (!p.rows_.emplace(doi, r).second) throw SchemaError(line, p.label_ + ": duplicate DOI " + doi);
  }
  return p;
}

FixtureAltmetricProvider FixtureAltmetricProvider::load(const std::filesystem::path& path) {
  return from_csv(read_file(path), path.filename().string());
}

std::optional<AltmetricRecord> FixtureAltmetricProvider::lookup_altmetrics(const std::string& doi) {
  const auto it = rows_.find(doi);
  if (it == rows_.end()) return std::nullopt;
  return AltmetricRecord{doi, it->second.aas, it->second.news_mentions, it->second.mendeley_readers, id(),
                         now_seconds()};
}

}  // namespace revalign
