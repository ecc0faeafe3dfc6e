// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "alpha_oracle.hpp"

namespace revalign::testing {

double interval_distance(double a, double b) { return (a - b) * (a - b); }

double nominal_distance(double a, double b) { return a == b ? 0.0 : 1.0; }

OracleAlpha oracle_alpha(const Grid& grid, const Distance& d) {
  std::size_t units = 0;
  for (const auto& row : grid) units = std::max(units, row.size());

  std::vector<std::vector<double>> pairable;
  for (std::size_t u = 0; u < units; ++u) {
    std::vector<double> values;
    for (const auto& row : grid) {
      if (u < row.size() && row[u]) values.push_back(*row[u]);
    }
    if (values.size() >= 2) pairable.push_back(values);
  }

  OracleAlpha out;
  std::vector<double> pooled;
  for (const auto& values : pairable) pooled.insert(pooled.end(), values.begin(), values.end());
  out.n = pooled.size();
  if (pooled.empty()) return out;

  const double n = static_cast<double>(pooled.size());
  double observed = 0.0;
  for (const auto& values : pairable) {
    const double m = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (i != j) observed += d(values[i], values[j]) / (m - 1.0);
      }
    }
  }
  double expected = 0.0;
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    for (std::size_t j = 0; j < pooled.size(); ++j) {
      if (i != j) expected += d(pooled[i], pooled[j]);
    }
  }
  out.d_o = observed / n;
  out.d_e = expected / (n * (n - 1.0));
  out.alpha = *out.d_e == 0.0 ? 1.0 : 1.0 - *out.d_o / *out.d_e;
  return out;
}

}  // namespace revalign::testing
