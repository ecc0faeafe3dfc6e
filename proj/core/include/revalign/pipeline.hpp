// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "revalign/corpus.hpp"
#include "revalign/errors.hpp"
#include "revalign/extraction.hpp"
#include "revalign/pipeline_config.hpp"
#include "revalign/providers.hpp"
#include "revalign/scorer.hpp"

namespace revalign {

/// A failure inside one pipeline stage. `kind()` names the original error
/// type (AuthError, SchemaError, ...).
class StageError : public Error {
 public:
  StageError(std::string stage, std::string kind, const std::string& message);

  const std::string& stage() const noexcept { return stage_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string stage_;
  std::string kind_;
};

/// Name of the most specific library error type of `e`, or "Error".
std::string error_kind(const std::exception& e);

// --- extraction ------------------------------------------------------------

struct PageResult {
  std::filesystem::path page;
  std::size_t statements = 0;
  std::string error;  // empty on success
};

struct ExtractSummary {
  std::vector<PageResult> pages;
  bool corpus_written = false;

  std::size_t failures() const;
};

/// Turns every *.html / *.htm file of `html_dir` (sorted by name, article id =
/// file stem) into a corpus file. When any page fails, nothing is written
/// unless `keep_partial` is set, in which case the good pages are. Throws
/// ExtractionError "no input pages" for a directory without pages.
ExtractSummary cmd_extract(const std::filesystem::path& html_dir, const ExtractionConfig& selectors,
                           const std::filesystem::path& corpus_out, bool keep_partial,
                           const CorpusOptions& options = {});

// --- scoring to report -----------------------------------------------------

/// Stand-ins for the configured scorer and providers, used by tests.
struct PipelineHooks {
  Scorer* scorer = nullptr;
  CitationProvider* citations = nullptr;
  AltmetricProvider* altmetrics = nullptr;
  std::ostream* log = nullptr;
};

struct RunSummary {
  std::vector<std::filesystem::path> outputs;
  std::size_t articles = 0;
  std::size_t statements = 0;
  std::size_t score_records = 0;
  std::size_t failed_records = 0;
  std::string scorer_id;
};

/// Score stage: writes the scores file.
RunSummary cmd_score(const PipelineConfig& config, const PipelineHooks& hooks = {});

/// Agreement stage: reads the scores file, writes alpha_per_article.csv and,
/// with several runs, run_agreement.csv.
RunSummary cmd_agree(const PipelineConfig& config);

/// Report stage: reads corpus and scores, enriches, writes the tables.
RunSummary cmd_report(const PipelineConfig& config, const PipelineHooks& hooks = {});

/// Every stage in order plus manifest.json (config hash, scorer id, output
/// digests, timestamps). With the mock scorer and fixture providers all
/// outputs except the manifest timestamps are byte-identical between runs.
///
/// ConfigError passes through unchanged; everything else is rethrown as
/// StageError tagged with the failing stage. A remote scorer without an API
/// key fails before any file is read.
RunSummary cmd_run_all(const PipelineConfig& config, const PipelineHooks& hooks = {});

}  // namespace revalign
