// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "revalign/corpus.hpp"
#include "revalign/html.hpp"

namespace revalign {

/// Selector scheme for saved article pages.
///
/// Config file keys: `statement_selector` (required), `reviewer_selector`,
/// `exclude_selectors` (comma-separated), `title_selector`, `date_selector`,
/// `doi_selector`.
struct ExtractionConfig {
  html::Selector statement;
  std::optional<html::Selector> reviewer;
  std::vector<html::Selector> exclude;
  html::Selector title = html::Selector::parse("h1");
  html::Selector date = html::Selector::parse("time");
  html::Selector doi = html::Selector::parse("a");

  static ExtractionConfig from_selectors(std::string_view statement_selector,
                                         std::string_view reviewer_selector = {},
                                         std::string_view exclude_selectors = {});
  static ExtractionConfig load(const std::filesystem::path& path);
};

/// Statements in document order. Elements matched by an exclusion selector
/// are dropped together with their subtrees, including statement containers
/// themselves. The reviewer node's text becomes `reviewer` and is not part of
/// the statement text. Statement ids are `s1`, `s2`, ... by position.
///
/// Throws ExtractionError when no container survives.
std::vector<Statement> extract_statements(std::string_view html, const ExtractionConfig& config);

/// Full article from one saved page. The publication date comes from the
/// `datetime`/`content` attribute or text of the first date node and must be
/// YYYY-MM-DD; the DOI is the first one found in the href/content or text of
/// the DOI nodes.
RicArticle extract_article(std::string_view html, const ExtractionConfig& config, std::string article_id);

}  // namespace revalign
