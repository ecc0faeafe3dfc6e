// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/response_parser.hpp"

#include <cmath>
#include <string>

#include "json.hpp"
#include "revalign/errors.hpp"
#include "revalign/text.hpp"

namespace revalign {

using nlohmann::json;

namespace {

// End (exclusive) of the brace-balanced span opening at `open`, honouring
// JSON string literals. npos when unbalanced.
std::size_t balanced_end(std::string_view s, std::size_t open) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = open; i < s.size(); ++i) {
    const char c = s[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return i + 1;
    }
  }
  return std::string_view::npos;
}

bool has_criterion_key(const json& obj) {
  for (auto c : kAllCriteria) {
    if (obj.contains(std::string(criterion_key(c)))) return true;
  }
  return false;
}

bool is_na_string(const std::string& s) {
  const auto lower = to_lower(trim(s));
  return lower == "na" || lower == "n/a" || lower == "null";
}

}  // namespace

ScoreVector parse_score_response(std::string_view raw) {
  bool saw_object = false;
  for (auto open = raw.find('{'); open != std::string_view::npos; open = raw.find('{', open + 1)) {
    const auto end = balanced_end(raw, open);
    if (end == std::string_view::npos) continue;
    const json obj = json::parse(raw.substr(open, end - open), nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) continue;
    saw_object = true;
    if (!has_criterion_key(obj)) continue;

    ScoreVector scores;
    for (auto c : kAllCriteria) {
      const std::string key(criterion_key(c));
      const auto it = obj.find(key);
      if (it == obj.end()) throw MissingKey(key);
      if (it->is_null() || (it->is_string() && is_na_string(it->get<std::string>()))) continue;
      if (!it->is_number()) throw MalformedResponse("value for " + key + " is neither a number nor null");
      const double v = it->get<double>();
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) throw OutOfRangeScore(key, v);
      scores.set(c, v);
    }
    return scores;
  }
  if (saw_object) throw MissingKey(std::string(criterion_key(Criterion::K0)));
  throw MalformedResponse("no JSON object in response");
}

}  // namespace revalign
