// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/report.hpp"

#include <sstream>

#include "revalign/csv.hpp"
#include "revalign/text.hpp"

namespace revalign::report {

namespace {

std::string fixed_or(const std::optional<double>& v, int decimals, const std::string& na) {
  return v ? format_fixed(*v, decimals) : na;
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string md_rule(std::size_t columns) {
  std::string out = "|";
  for (std::size_t i = 0; i < columns; ++i) out += i == 0 ? " --- |" : " ---: |";
  return out + "\n";
}

std::string md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out = md_row(header) + md_rule(header.size());
  for (const auto& r : rows) out += md_row(r);
  return out;
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out = csv::join(header) + "\n";
  for (const auto& r : rows) out += csv::join(r) + "\n";
  return out;
}

std::vector<const BinRow*> all_rows(const ReportTable& table) {
  std::vector<const BinRow*> rows;
  for (const auto& r : table.rows) rows.push_back(&r);
  rows.push_back(&table.totals);
  rows.push_back(&table.excluded);
  return rows;
}

std::vector<std::vector<std::string>> table2_rows(const ReportTable& table, const std::string& na) {
  std::vector<std::vector<std::string>> rows;
  for (const BinRow* r : all_rows(table)) {
    rows.push_back({r->label, std::to_string(r->papers), std::to_string(r->papers_matched),
                    std::to_string(r->citations_total), fixed_or(r->citations_per_paper, kRateDecimals, na)});
  }
  return rows;
}

std::vector<std::vector<std::string>> table3_rows(const ReportTable& table, const std::string& na) {
  std::vector<std::vector<std::string>> rows;
  for (const BinRow* r : all_rows(table)) {
    rows.push_back({r->label, std::to_string(r->papers_matched), format_fixed(r->aas_total, kRateDecimals),
                    fixed_or(r->aas_per_paper, kRateDecimals, na), std::to_string(r->nm_total),
                    fixed_or(r->nm_per_paper, kRateDecimals, na), std::to_string(r->mendeley_total)});
  }
  return rows;
}

std::vector<std::vector<std::string>> table1_left_rows(const AlphaHistogram& h) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < kAlphaBandCount; ++i) {
    rows.push_back({std::string(alpha_band_label(static_cast<AlphaBand>(i))), std::to_string(h.counts[i])});
  }
  return rows;
}

std::vector<std::vector<std::string>> table1_right_rows(const std::array<CriterionSummary, kCriterionCount>& s,
                                                        const std::string& na) {
  std::vector<std::vector<std::string>> rows;
  for (auto c : kAllCriteria) {
    const auto& entry = s[static_cast<std::size_t>(c)];
    rows.push_back({std::string(criterion_key(c)) + " -- " + std::string(criterion_label(c)),
                    fixed_or(entry.mean, kAverageDecimals, na), std::to_string(entry.na_count)});
  }
  return rows;
}

}  // namespace

std::string table1_left_csv(const AlphaHistogram& histogram) {
  return csv_table({"alpha", "count"}, table1_left_rows(histogram));
}

std::string table1_left_md(const AlphaHistogram& histogram, std::optional<double> mean) {
  return md_table({"Alpha", "Count"}, table1_left_rows(histogram)) + "\nArticles: " +
         std::to_string(histogram.total()) + ". Mean alpha: " + fixed_or(mean, kAlphaDecimals, "NA") + ".\n";
}

std::string table1_right_csv(const std::array<CriterionSummary, kCriterionCount>& summary) {
  return csv_table({"criterion", "average", "na"}, table1_right_rows(summary, ""));
}

std::string table1_right_md(const std::array<CriterionSummary, kCriterionCount>& summary) {
  return md_table({"Criterion", "Average", "NA"}, table1_right_rows(summary, "NA"));
}

std::string table2_csv(const ReportTable& table) {
  return csv_table({"bin", "papers", "papers_matched", "citations_total", "citations_per_paper"},
                   table2_rows(table, ""));
}

std::string table2_md(const ReportTable& table) {
  return md_table({"Average K0-K5", "Papers", "Papers with citations", "Citations", "Citations per paper"},
                  table2_rows(table, "NA"));
}

std::string table3_csv(const ReportTable& table) {
  return csv_table({"bin", "papers_matched", "aas_total", "aas_per_paper", "nm_total", "nm_per_paper",
                    "mendeley_total"},
                   table3_rows(table, ""));
}

std::string table3_md(const ReportTable& table) {
  return md_table({"Average K0-K5", "Papers with altmetrics", "AAS", "AAS per paper", "News mentions",
                   "NM per paper", "Mendeley readers"},
                  table3_rows(table, "NA"));
}

std::string alpha_csv(const std::vector<std::string>& order, const std::map<std::string, AlphaResult>& alphas) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& id : order) {
    const auto it = alphas.find(id);
    if (it == alphas.end()) continue;
    const auto& r = it->second;
    rows.push_back({id, fixed_or(r.alpha, kAlphaDecimals, ""), fixed_or(r.observed_disagreement, 6, ""),
                    fixed_or(r.expected_disagreement, 6, ""), std::to_string(r.n_units_used),
                    std::to_string(r.n_pairable_values)});
  }
  return csv_table({"article_id", "alpha", "d_o", "d_e", "n_units", "n_pairable"}, rows);
}

std::string run_agreement_csv(std::size_t runs, const AlphaResult& r) {
  return csv_table({"runs", "metric", "alpha", "d_o", "d_e", "n_units", "n_pairable"},
                   {{std::to_string(runs), std::string(metric_name(r.metric)), fixed_or(r.alpha, kAlphaDecimals, ""),
                     fixed_or(r.observed_disagreement, 6, ""), fixed_or(r.expected_disagreement, 6, ""),
                     std::to_string(r.n_units_used), std::to_string(r.n_pairable_values)}});
}

}  // namespace revalign::report
