// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/score_vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "revalign/errors.hpp"

namespace revalign {

namespace {

struct CriterionText {
  std::string_view key;
  std::string_view label;
  std::string_view description;
};

constexpr std::array<CriterionText, kCriterionCount> kCriteria = {{
    {"K0", "Research questions",
     "Examination of the research question (e.g. are the aims and rationale clearly formulated?)"},
    {"K1", "Originality",
     "Evaluation of originality (contribution, increase in knowledge in the literature or in the subject)"},
    {"K2", "Methods", "The strengths and weaknesses of the method described are clearly stated"},
    {"K3", "Writing",
     "Specific comments on the writing of the manuscript (e.g. spelling, organisation, illustrations, etc.)"},
    {"K4", "Results and conclusions",
     "Author's interpretation of the results and conclusions drawn from the results"},
    {"K5", "Statistics",
     "Comments on the statistics where appropriate (e.g. whether they are robust and fit for purpose and whether "
     "the controls and sampling mechanisms are sufficiently and well described)"},
}};

void check(Criterion c, std::optional<double> v) {
  if (v && !(std::isfinite(*v) && *v >= 0.0 && *v <= 1.0)) {
    throw OutOfRange("score " + std::string(criterion_key(c)) + " = " + std::to_string(*v) + " outside [0, 1]");
  }
}

}  // namespace

std::string_view criterion_key(Criterion c) { return kCriteria.at(static_cast<std::size_t>(c)).key; }
std::string_view criterion_label(Criterion c) { return kCriteria.at(static_cast<std::size_t>(c)).label; }
std::string_view criterion_description(Criterion c) { return kCriteria.at(static_cast<std::size_t>(c)).description; }

ScoreVector::ScoreVector(const Values& values) : values_(values) {
  for (auto c : kAllCriteria) check(c, (*this)[c]);
}

void ScoreVector::set(Criterion c, std::optional<double> value) {
  check(c, value);
  values_[static_cast<std::size_t>(c)] = value;
}

std::size_t ScoreVector::present_count() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); }));
}

}  // namespace revalign
