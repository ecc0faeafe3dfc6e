// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revalign/agreement.hpp"
#include "revalign/enrichment.hpp"
#include "revalign/scoring.hpp"

namespace revalign {

/// One of the five mean-K score bands. Bands are [lo, hi) except the last,
/// which is closed at 1.
struct ScoreBin {
  std::size_t index;
  std::string_view label;
  double lo;
  double hi;
};

inline constexpr std::size_t kScoreBinCount = 5;
const std::array<ScoreBin, kScoreBinCount>& score_bins();

/// Throws OutOfRange outside [0, 1] (and for NaN).
const ScoreBin& assign_bin(double mean_k);

/// Mean of every present criterion value over all of an article's
/// statements, pooled. NA when nothing is present. Throws MixedArticle when
/// the records span articles or runs.
std::optional<double> article_mean_k(std::span<const ScoredStatement> statements);

/// article_mean_k for every article with records in `run`.
std::map<std::string, std::optional<double>> mean_k_per_article(std::span<const ScoredStatement> scores, int run);

enum class AlphaBand : std::size_t { Negative, To0_2, To0_4, To0_6, To0_8, Below1, One, NA };
inline constexpr std::size_t kAlphaBandCount = 8;

std::string_view alpha_band_label(AlphaBand band);
AlphaBand alpha_band(const std::optional<double>& alpha);

struct AlphaHistogram {
  std::array<std::size_t, kAlphaBandCount> counts{};

  std::size_t operator[](AlphaBand band) const { return counts[static_cast<std::size_t>(band)]; }
  std::size_t total() const;
};

AlphaHistogram alpha_histogram(const std::map<std::string, AlphaResult>& alphas);

/// Mean of the present alphas; NA when there are none.
std::optional<double> mean_alpha(const std::map<std::string, AlphaResult>& alphas);

/// Aggregates for one score band, or for the totals row.
struct BinRow {
  std::string label;
  std::size_t papers = 0;
  /// Papers holding the record kind the table is about.
  std::size_t papers_matched = 0;
  std::int64_t citations_total = 0;
  std::optional<double> citations_per_paper;
  double aas_total = 0.0;
  std::optional<double> aas_per_paper;
  std::int64_t nm_total = 0;
  std::optional<double> nm_per_paper;
  std::int64_t mendeley_total = 0;
};

struct ReportTable {
  std::array<BinRow, kScoreBinCount> rows;
  BinRow totals;
  /// Articles whose mean K is NA; they appear in no band and not in totals.
  BinRow excluded;
};

/// Citation table. papers_matched counts articles with a citation record and
/// is the denominator of citations_per_paper (NA when zero).
ReportTable bibliometric_table(std::span<const EnrichedArticle> enriched);

/// Altmetric table over AAS, news mentions and Mendeley readers, matched on
/// altmetric records.
ReportTable altmetric_table(std::span<const EnrichedArticle> enriched);

}  // namespace revalign
