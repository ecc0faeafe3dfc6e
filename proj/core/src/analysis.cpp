// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "revalign/errors.hpp"

namespace revalign {

namespace {

constexpr std::array<ScoreBin, kScoreBinCount> kBins = {{
    {0, "0 - 0.19", 0.0, 0.2},
    {1, "0.2 - 0.39", 0.2, 0.4},
    {2, "0.4 - 0.59", 0.4, 0.6},
    {3, "0.6 - 0.79", 0.6, 0.8},
    {4, "0.8 - 1", 0.8, 1.0},
}};

constexpr std::array<std::string_view, kAlphaBandCount> kAlphaLabels = {
    "< 0", "0 - 0.19", "0.2 - 0.39", "0.4 - 0.59", "0.6 - 0.79", "0.8 - 0.99", "1", "NA"};

double sorted_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return std::accumulate(values.begin(), values.end(), 0.0);
}

std::optional<double> rate(double total, std::size_t matched) {
  if (matched == 0) return std::nullopt;
  return total / static_cast<double>(matched);
}

template <typename AddFn>
ReportTable build_table(std::span<const EnrichedArticle> enriched, AddFn add) {
  ReportTable table;
  for (const auto& bin : kBins) table.rows[bin.index].label = std::string(bin.label);
  table.totals.label = "total";
  table.excluded.label = "NA";
  for (const auto& e : enriched) {
    BinRow& row = e.mean_k ? table.rows[assign_bin(*e.mean_k).index] : table.excluded;
    ++row.papers;
    add(row, e);
  }
  for (const auto& row : table.rows) {
    table.totals.papers += row.papers;
    table.totals.papers_matched += row.papers_matched;
    table.totals.citations_total += row.citations_total;
    table.totals.aas_total += row.aas_total;
    table.totals.nm_total += row.nm_total;
    table.totals.mendeley_total += row.mendeley_total;
  }
  auto finish = [](BinRow& row) {
    row.citations_per_paper = rate(static_cast<double>(row.citations_total), row.papers_matched);
    row.aas_per_paper = rate(row.aas_total, row.papers_matched);
    row.nm_per_paper = rate(static_cast<double>(row.nm_total), row.papers_matched);
  };
  for (auto& row : table.rows) finish(row);
  finish(table.totals);
  finish(table.excluded);
  return table;
}

}  // namespace

const std::array<ScoreBin, kScoreBinCount>& score_bins() { return kBins; }

const ScoreBin& assign_bin(double mean_k) {
  if (!(mean_k >= 0.0 && mean_k <= 1.0)) throw OutOfRange("mean K " + std::to_string(mean_k) + " outside [0, 1]");
  for (const auto& bin : kBins) {
    if (mean_k < bin.hi) return bin;
  }
  return kBins.back();
}

std::optional<double> article_mean_k(std::span<const ScoredStatement> statements) {
  std::vector<double> values;
  for (const auto& s : statements) {
    if (s.article_id != statements.front().article_id || s.run != statements.front().run) {
      throw MixedArticle("mean K over records from different articles or runs (" + statements.front().article_id +
                         " run " + std::to_string(statements.front().run) + " vs " + s.article_id + " run " +
                         std::to_string(s.run) + ")");
    }
    for (const auto& v : s.scores.values()) {
      if (v) values.push_back(*v);
    }
  }
  if (values.empty()) return std::nullopt;
  const auto n = static_cast<double>(values.size());
  return std::clamp(sorted_sum(std::move(values)) / n, 0.0, 1.0);
}

std::map<std::string, std::optional<double>> mean_k_per_article(std::span<const ScoredStatement> scores, int run) {
  std::unordered_map<std::string, ScoreSet> groups;
  for (const auto& s : scores) {
    if (s.run == run) groups[s.article_id].push_back(s);
  }
  std::map<std::string, std::optional<double>> out;
  for (const auto& [id, records] : groups) out[id] = article_mean_k(records);
  return out;
}

std::string_view alpha_band_label(AlphaBand band) { return kAlphaLabels.at(static_cast<std::size_t>(band)); }

AlphaBand alpha_band(const std::optional<double>& alpha) {
  if (!alpha) return AlphaBand::NA;
  const double a = *alpha;
  if (a < 0.0) return AlphaBand::Negative;
  if (a < 0.2) return AlphaBand::To0_2;
  if (a < 0.4) return AlphaBand::To0_4;
  if (a < 0.6) return AlphaBand::To0_6;
  if (a < 0.8) return AlphaBand::To0_8;
  if (a < 1.0) return AlphaBand::Below1;
  return AlphaBand::One;
}

std::size_t AlphaHistogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

AlphaHistogram alpha_histogram(const std::map<std::string, AlphaResult>& alphas) {
  AlphaHistogram h;
  for (const auto& [id, result] : alphas) ++h.counts[static_cast<std::size_t>(alpha_band(result.alpha))];
  return h;
}

std::optional<double> mean_alpha(const std::map<std::string, AlphaResult>& alphas) {
  std::vector<double> values;
  for (const auto& [id, result] : alphas) {
    if (result.alpha) values.push_back(*result.alpha);
  }
  if (values.empty()) return std::nullopt;
  const auto n = static_cast<double>(values.size());
  return sorted_sum(std::move(values)) / n;
}

ReportTable bibliometric_table(std::span<const EnrichedArticle> enriched) {
  return build_table(enriched, [](BinRow& row, const EnrichedArticle& e) {
    if (!e.citation) return;
    ++row.papers_matched;
    row.citations_total += e.citation->citations;
  });
}

ReportTable altmetric_table(std::span<const EnrichedArticle> enriched) {
  return build_table(enriched, [](BinRow& row, const EnrichedArticle& e) {
    if (!e.altmetric) return;
    ++row.papers_matched;
    row.aas_total += e.altmetric->aas;
    row.nm_total += e.altmetric->news_mentions;
    row.mendeley_total += e.altmetric->mendeley_readers;
  });
}

}  // namespace revalign
