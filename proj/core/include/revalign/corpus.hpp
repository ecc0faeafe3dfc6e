// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revalign/text.hpp"

namespace revalign {

/// One expert statement on a reviewed study.
struct Statement {
  std::string statement_id;
  std::optional<std::string> reviewer;
  std::string text;

  friend bool operator==(const Statement&, const Statement&) = default;
};

/// A reviewed primary study together with its expert statements.
struct RicArticle {
  std::string article_id;
  std::string title;
  std::chrono::year_month_day published{};
  std::optional<std::string> doi;  // normalized, see extract_doi
  std::vector<Statement> statements;

  friend bool operator==(const RicArticle&, const RicArticle&) = default;
};

struct Corpus {
  std::vector<RicArticle> articles;
  std::string source_label;
  std::optional<Timestamp> extracted_at;

  const RicArticle* find(std::string_view article_id) const;
  std::size_t statement_count() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

struct CorpusOptions {
  /// Statements with fewer non-whitespace characters are extraction debris.
  std::size_t min_statement_chars = 20;
};

/// Throws SchemaError (tagged with `line` when non-zero) if the article breaks
/// an invariant: empty id, unnormalized DOI, duplicate statement id, short or
/// blank statement text.
void validate_article(const RicArticle& article, const CorpusOptions& options = {}, std::size_t line = 0);

/// Reads the line-delimited corpus format. An optional first line carrying
/// only `source_label`/`extracted_at` sets corpus metadata; otherwise the
/// label defaults to `default_label`. Blank lines are ignored, anything else
/// malformed throws SchemaError with its line number.
Corpus parse_corpus_text(std::string_view text, std::string default_label = {}, const CorpusOptions& options = {});

/// Throws IoError when the file cannot be read.
Corpus parse_corpus(const std::filesystem::path& path, const CorpusOptions& options = {});

/// Header line followed by one article per line, newline-terminated.
std::string serialize_corpus(const Corpus& corpus);
void write_corpus(const std::filesystem::path& path, const Corpus& corpus);

}  // namespace revalign
