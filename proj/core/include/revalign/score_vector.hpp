// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace revalign {

/// The six review-quality criteria, in scoring order.
enum class Criterion : std::size_t { K0, K1, K2, K3, K4, K5 };

inline constexpr std::size_t kCriterionCount = 6;
inline constexpr std::array<Criterion, kCriterionCount> kAllCriteria = {
    Criterion::K0, Criterion::K1, Criterion::K2, Criterion::K3, Criterion::K4, Criterion::K5};

/// "K0" .. "K5".
std::string_view criterion_key(Criterion c);
/// Short display label, e.g. "Research questions".
std::string_view criterion_label(Criterion c);
/// Full wording used in the scoring instruction.
std::string_view criterion_description(Criterion c);

/// Per-statement scores. Each criterion holds a value in [0, 1] or is absent
/// (NA); NA and 0 are different things.
class ScoreVector {
 public:
  using Values = std::array<std::optional<double>, kCriterionCount>;

  ScoreVector() = default;
  /// Throws OutOfRange for any present value outside [0, 1] or non-finite.
  explicit ScoreVector(const Values& values);

  std::optional<double> operator[](Criterion c) const { return values_[static_cast<std::size_t>(c)]; }
  std::optional<double> at(std::size_t index) const { return values_.at(index); }
  void set(Criterion c, std::optional<double> value);

  const Values& values() const noexcept { return values_; }
  std::size_t present_count() const;
  bool all_na() const { return present_count() == 0; }

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;

 private:
  Values values_{};
};

}  // namespace revalign
