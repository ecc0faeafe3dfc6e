// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "revalign/analysis.hpp"
#include "revalign/enrichment.hpp"

namespace revalign::testing {

/// Published per-band marginals of the reference study (bands in score order).
struct BandMarginals {
  std::size_t papers;
  std::size_t matched;
  std::int64_t citations;
  std::int64_t aas;
  std::int64_t news_mentions;
  double citations_per_paper;
  double aas_per_paper;
  double nm_per_paper;
};

inline constexpr std::array<BandMarginals, kScoreBinCount> kBands{{
    {20, 11, 3169, 10012, 1097, 288.1, 910.2, 99.7},
    {19, 16, 2701, 16569, 2227, 168.8, 1035.6, 139.2},
    {180, 138, 39312, 211211, 20592, 284.9, 1530.5, 149.2},
    {252, 197, 58038, 302953, 37175, 294.6, 1537.8, 188.7},
    {51, 43, 12823, 71331, 8310, 298.2, 1658.9, 193.3},
}};

struct TotalMarginals {
  std::size_t papers = 522;
  std::size_t matched = 405;
  std::int64_t citations = 116043;
  std::int64_t aas = 612076;
  std::int64_t news_mentions = 69401;
  double citations_per_paper = 286.5;
  double aas_per_paper = 1511.3;
  double nm_per_paper = 171.4;
};

inline constexpr TotalMarginals kTotals{};

/// Splits `total` into `parts` non-negative integers that sum to it.
inline std::vector<std::int64_t> spread(std::int64_t total, std::size_t parts) {
  std::vector<std::int64_t> out(parts, total / static_cast<std::int64_t>(parts));
  for (std::int64_t i = 0; i < total % static_cast<std::int64_t>(parts); ++i) ++out[static_cast<std::size_t>(i)];
  return out;
}

/// One enriched article per paper: mean K at the band centre, the first
/// `matched` papers of each band carrying citation and altmetric records
/// whose sums equal the band totals.
inline std::vector<EnrichedArticle> paper_enriched_dataset() {
  std::vector<EnrichedArticle> out;
  for (std::size_t b = 0; b < kScoreBinCount; ++b) {
    const auto& band = kBands[b];
    const auto citations = spread(band.citations, band.matched);
    const auto aas = spread(band.aas, band.matched);
    const auto nm = spread(band.news_mentions, band.matched);
    for (std::size_t i = 0; i < band.papers; ++i) {
      EnrichedArticle e;
      e.article.article_id = "band" + std::to_string(b) + "-" + std::to_string(i);
      e.mean_k = 0.1 + 0.2 * static_cast<double>(b);
      if (i < band.matched) {
        const std::string doi = "10.5555/" + e.article.article_id;
        e.article.doi = doi;
        e.citation = CitationRecord{doi, citations[i], "synthetic", {}};
        e.altmetric = AltmetricRecord{doi, static_cast<double>(aas[i]), nm[i], 0, "synthetic", {}};
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

/// Alpha list shaped like the published histogram:
/// < 0, [0, .2), [.2, .4), [.4, .6), [.6, .8), [.8, 1), 1, NA.
inline constexpr std::array<std::size_t, kAlphaBandCount> kAlphaBandCounts{114, 90, 90, 91, 36, 3, 49, 48};

inline std::map<std::string, AlphaResult> paper_alpha_list() {
  constexpr std::array<double, 6> lo{-0.6, 0.0, 0.2, 0.4, 0.6, 0.8};
  std::map<std::string, AlphaResult> out;
  std::size_t id = 0;
  for (std::size_t band = 0; band < kAlphaBandCount; ++band) {
    for (std::size_t i = 0; i < kAlphaBandCounts[band]; ++i) {
      AlphaResult r;
      if (band < 6) {
        const double width = band == 0 ? 0.59 : 0.1999;
        r.alpha = lo[band] + width * static_cast<double>(i) / static_cast<double>(kAlphaBandCounts[band]);
      } else if (band == 6) {
        r.alpha = 1.0;
      }
      out.emplace("article-" + std::to_string(id++), r);
    }
  }
  return out;
}

}  // namespace revalign::testing
