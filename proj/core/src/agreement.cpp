// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/agreement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "revalign/errors.hpp"

namespace revalign {

namespace {

double distance(double a, double b, Metric metric) {
  if (metric == Metric::Nominal) return a == b ? 0.0 : 1.0;
  const double d = a - b;
  return d * d;
}

// Sum of d(v_i, v_j) over ordered pairs i != j of the pooled values.
double pooled_pair_sum(std::vector<double> pooled, Metric metric) {
  std::sort(pooled.begin(), pooled.end());
  if (pooled.front() == pooled.back()) return 0.0;
  const auto n = static_cast<double>(pooled.size());
  if (metric == Metric::Nominal) {
    // n^2 - sum of squared category counts
    double same = 0.0;
    for (std::size_t i = 0; i < pooled.size();) {
      std::size_t j = i;
      while (j < pooled.size() && pooled[j] == pooled[i]) ++j;
      const auto count = static_cast<double>(j - i);
      same += count * count;
      i = j;
    }
    return n * n - same;
  }
  // sum_{i,j} (x_i - x_j)^2 = 2 n sum_i (x_i - mean)^2
  double sum = 0.0;
  for (double v : pooled) sum += v;
  const double mean = sum / n;
  double squares = 0.0;
  for (double v : pooled) squares += (v - mean) * (v - mean);
  return 2.0 * n * squares;
}

}  // namespace

ReliabilityMatrix::ReliabilityMatrix(std::vector<std::string> raters, std::vector<std::string> units,
                                     std::vector<Cell> values)
    : raters_(std::move(raters)), units_(std::move(units)), values_(std::move(values)) {
  if (values_.size() != raters_.size() * units_.size()) {
    throw std::invalid_argument("reliability matrix: " + std::to_string(values_.size()) + " cells for " +
                                std::to_string(raters_.size()) + " raters x " + std::to_string(units_.size()) +
                                " units");
  }
  for (const auto& v : values_) {
    if (v && !std::isfinite(*v)) throw NonFiniteValue("reliability matrix holds a non-finite rating");
  }
}

ReliabilityMatrix ReliabilityMatrix::from_rows(const std::vector<std::vector<Cell>>& rows) {
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  std::vector<std::string> raters, units;
  std::vector<Cell> values;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw std::invalid_argument("reliability matrix rows differ in length");
    raters.push_back("r" + std::to_string(r));
    values.insert(values.end(), rows[r].begin(), rows[r].end());
  }
  for (std::size_t u = 0; u < width; ++u) units.push_back("u" + std::to_string(u));
  return ReliabilityMatrix(std::move(raters), std::move(units), std::move(values));
}

std::vector<double> ReliabilityMatrix::unit_values(std::size_t unit) const {
  std::vector<double> out;
  for (std::size_t r = 0; r < raters_.size(); ++r) {
    if (const auto v = at(r, unit)) out.push_back(*v);
  }
  return out;
}

std::string_view metric_name(Metric m) { return m == Metric::Nominal ? "nominal" : "interval"; }

AlphaResult krippendorff_alpha(const ReliabilityMatrix& matrix, Metric metric) {
  AlphaResult result;
  result.metric = metric;

  std::vector<double> pooled;
  double within = 0.0;  // sum_u sum_{i != j} d / (m_u - 1)
  for (std::size_t u = 0; u < matrix.unit_count(); ++u) {
    const auto values = matrix.unit_values(u);
    if (values.size() < 2) continue;
    ++result.n_units_used;
    double unit_sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (i != j) unit_sum += distance(values[i], values[j], metric);
      }
    }
    within += unit_sum / static_cast<double>(values.size() - 1);
    pooled.insert(pooled.end(), values.begin(), values.end());
  }
  result.n_pairable_values = pooled.size();
  if (result.n_units_used == 0) return result;

  const auto n = static_cast<double>(pooled.size());
  const double d_o = within / n;
  const double d_e = pooled_pair_sum(std::move(pooled), metric) / (n * (n - 1.0));
  result.observed_disagreement = d_o;
  result.expected_disagreement = d_e;
  result.alpha = d_e == 0.0 ? 1.0 : 1.0 - d_o / d_e;
  return result;
}

ReliabilityMatrix article_reliability(std::span<const ScoredStatement> article_scores, int run) {
  std::vector<std::string> raters;
  std::vector<std::string> units;
  for (auto c : kAllCriteria) units.emplace_back(criterion_key(c));
  std::vector<ReliabilityMatrix::Cell> values;
  std::unordered_set<std::string> seen;
  for (const auto& s : article_scores) {
    if (s.article_id != article_scores.front().article_id) {
      throw MixedArticle("records for " + article_scores.front().article_id + " and " + s.article_id + " mixed");
    }
    if (s.run != run) {
      throw MixedArticle(s.article_id + "/" + s.statement_id + " is from run " + std::to_string(s.run) +
                         ", expected run " + std::to_string(run));
    }
    if (!seen.insert(s.statement_id).second) {
      throw MixedArticle(s.article_id + "/" + s.statement_id + " appears more than once in run " +
                         std::to_string(run));
    }
    raters.push_back(s.statement_id);
    values.insert(values.end(), s.scores.values().begin(), s.scores.values().end());
  }
  return ReliabilityMatrix(std::move(raters), std::move(units), std::move(values));
}

std::map<std::string, AlphaResult> alpha_per_article(std::span<const ScoredStatement> scores, int run,
                                                     Metric metric) {
  std::vector<std::string> order;
  std::unordered_map<std::string, ScoreSet> groups;
  for (const auto& s : scores) {
    if (s.run != run) continue;
    auto [it, inserted] = groups.try_emplace(s.article_id);
    if (inserted) order.push_back(s.article_id);
    it->second.push_back(s);
  }
  std::map<std::string, AlphaResult> out;
  for (const auto& id : order) out[id] = krippendorff_alpha(article_reliability(groups[id], run), metric);
  return out;
}

std::vector<ScoreSet> split_runs(std::span<const ScoredStatement> scores) {
  std::vector<ScoreSet> runs;
  for (const auto& s : scores) {
    if (static_cast<std::size_t>(s.run) >= runs.size()) runs.resize(static_cast<std::size_t>(s.run) + 1);
    runs[static_cast<std::size_t>(s.run)].push_back(s);
  }
  return runs;
}

AlphaResult alpha_across_runs(std::span<const ScoreSet> runs, Metric metric) {
  if (runs.size() < 2) {
    throw InsufficientRuns("agreement across runs needs at least 2 runs, got " + std::to_string(runs.size()));
  }
  // Unit key -> column; key is article, statement and criterion joined by NUL.
  std::unordered_map<std::string, std::size_t> columns;
  std::vector<std::string> units;
  std::vector<std::unordered_map<std::size_t, double>> cells(runs.size());
  for (std::size_t r = 0; r < runs.size(); ++r) {
    std::unordered_set<std::string> seen;
    for (const auto& s : runs[r]) {
      const std::string statement_key = s.article_id + '\0' + s.statement_id;
      if (!seen.insert(statement_key).second) {
        throw MixedArticle(s.article_id + "/" + s.statement_id + " appears more than once in run set " +
                           std::to_string(r));
      }
      for (auto c : kAllCriteria) {
        const std::string key = statement_key + '\0' + std::string(criterion_key(c));
        auto [it, inserted] = columns.try_emplace(key, units.size());
        if (inserted) units.push_back(s.article_id + "/" + s.statement_id + "/" + std::string(criterion_key(c)));
        if (const auto v = s.scores[c]) cells[r][it->second] = *v;
      }
    }
  }
  std::vector<std::string> raters;
  std::vector<ReliabilityMatrix::Cell> values(runs.size() * units.size());
  for (std::size_t r = 0; r < runs.size(); ++r) {
    raters.push_back("run" + std::to_string(r));
    for (const auto& [col, v] : cells[r]) values[r * units.size() + col] = v;
  }
  return krippendorff_alpha(ReliabilityMatrix(std::move(raters), std::move(units), std::move(values)), metric);
}

}  // namespace revalign
