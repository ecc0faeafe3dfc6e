// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revalign/agreement.hpp"
#include "revalign/analysis.hpp"
#include "revalign/scoring.hpp"

namespace revalign::report {

/// Display rounding for per-paper rates and AAS totals.
inline constexpr int kRateDecimals = 1;
inline constexpr int kAlphaDecimals = 4;
inline constexpr int kAverageDecimals = 2;

/// NA renders as an empty field in CSV and as "NA" in Markdown.
std::string table1_left_csv(const AlphaHistogram& histogram);
std::string table1_left_md(const AlphaHistogram& histogram, std::optional<double> mean);

std::string table1_right_csv(const std::array<CriterionSummary, kCriterionCount>& summary);
std::string table1_right_md(const std::array<CriterionSummary, kCriterionCount>& summary);

/// Header `bin,papers,papers_matched,citations_total,citations_per_paper`;
/// band rows, then `total`, then `NA` for articles without a mean K.
std::string table2_csv(const ReportTable& table);
std::string table2_md(const ReportTable& table);

/// Header `bin,papers_matched,aas_total,aas_per_paper,nm_total,nm_per_paper,mendeley_total`.
std::string table3_csv(const ReportTable& table);
std::string table3_md(const ReportTable& table);

/// Header `article_id,alpha,d_o,d_e,n_units,n_pairable`, rows in `order`
/// (ids missing from `alphas` are skipped).
std::string alpha_csv(const std::vector<std::string>& order, const std::map<std::string, AlphaResult>& alphas);

/// Header `runs,metric,alpha,d_o,d_e,n_units,n_pairable`, one row.
std::string run_agreement_csv(std::size_t runs, const AlphaResult& result);

}  // namespace revalign::report
