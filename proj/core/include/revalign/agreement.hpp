// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revalign/scoring.hpp"

namespace revalign {

/// Raters x units grid of optional ratings, stored row-major.
class ReliabilityMatrix {
 public:
  using Cell = std::optional<double>;

  /// Throws std::invalid_argument on a size mismatch and NonFiniteValue for
  /// NaN or infinite ratings.
  ReliabilityMatrix(std::vector<std::string> raters, std::vector<std::string> units, std::vector<Cell> values);

  /// Rows are raters. Labels default to r0.. and u0..; rows must be equally long.
  static ReliabilityMatrix from_rows(const std::vector<std::vector<Cell>>& rows);

  std::size_t rater_count() const noexcept { return raters_.size(); }
  std::size_t unit_count() const noexcept { return units_.size(); }
  const std::vector<std::string>& raters() const noexcept { return raters_; }
  const std::vector<std::string>& units() const noexcept { return units_; }
  Cell at(std::size_t rater, std::size_t unit) const { return values_.at(rater * units_.size() + unit); }

  /// Present ratings of one unit, in rater order.
  std::vector<double> unit_values(std::size_t unit) const;

 private:
  std::vector<std::string> raters_;
  std::vector<std::string> units_;
  std::vector<Cell> values_;
};

enum class Metric { Nominal, Interval };

std::string_view metric_name(Metric m);

struct AlphaResult {
  std::optional<double> alpha;
  std::optional<double> observed_disagreement;  // D_o
  std::optional<double> expected_disagreement;  // D_e
  std::size_t n_pairable_values = 0;
  std::size_t n_units_used = 0;
  Metric metric = Metric::Interval;
};

/// Krippendorff's Alpha for data with missing values.
///
/// Units with fewer than two ratings are dropped. With n pairable values left
/// and m_u ratings in unit u,
///
///   D_o = 1/n * sum_u sum_{i != j in u} d(v_i, v_j) / (m_u - 1)
///   D_e = sum_{i != j over all pairable values} d(v_i, v_j) / (n (n - 1))
///   alpha = 1 - D_o / D_e
///
/// where d is (a - b)^2 for the interval metric and [a != b] for nominal.
/// No usable unit leaves alpha, D_o and D_e NA; D_e = 0 (every pairable value
/// identical) gives alpha = 1.
AlphaResult krippendorff_alpha(const ReliabilityMatrix& matrix, Metric metric);

/// One article's statements in one run as raters over the units K0..K5.
/// Throws MixedArticle when records disagree on article_id, carry a run other
/// than `run`, or repeat a statement_id.
ReliabilityMatrix article_reliability(std::span<const ScoredStatement> article_scores, int run);

/// Alpha of every article that has records in `run`.
std::map<std::string, AlphaResult> alpha_per_article(std::span<const ScoredStatement> scores, int run,
                                                     Metric metric);

/// Splits a score set into per-run sets, indexed by run number.
std::vector<ScoreSet> split_runs(std::span<const ScoredStatement> scores);

/// Agreement between annotation runs: raters are runs, units are
/// (article, statement, criterion) triples seen in any run. Throws
/// InsufficientRuns for fewer than two runs.
AlphaResult alpha_across_runs(std::span<const ScoreSet> runs, Metric metric);

}  // namespace revalign
