// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/doi.hpp"

#include <regex>

#include "revalign/text.hpp"

namespace revalign {

namespace {

const std::regex& doi_pattern() {
  static const std::regex pattern(R"(10\.[0-9]{4,9}/[^\s"'<>]+)", std::regex::ECMAScript);
  return pattern;
}

bool trailing_punct(char c) { return c == '.' || c == ',' || c == ';' || c == ')'; }

}  // namespace

std::optional<std::string> extract_doi(std::string_view text) {
  using Iter = std::regex_iterator<std::string_view::const_iterator>;
  for (Iter it(text.begin(), text.end(), doi_pattern()), end; it != end; ++it) {
    std::string doi = to_lower(text.substr(static_cast<std::size_t>(it->position(0)),
                                           static_cast<std::size_t>(it->length(0))));
    while (trailing_punct(doi.back())) doi.pop_back();
    // "10.1234/." strips down to a bare prefix, which is not a DOI.
    if (doi.back() != '/') return doi;
  }
  return std::nullopt;
}

bool is_normalized_doi(std::string_view doi) {
  const auto normalized = extract_doi(doi);
  return normalized && *normalized == doi;
}

}  // namespace revalign
