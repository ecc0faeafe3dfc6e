// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revalign/corpus.hpp"
#include "revalign/kv_cache.hpp"
#include "revalign/prompt.hpp"
#include "revalign/score_vector.hpp"
#include "revalign/scorer.hpp"

namespace revalign {

struct ScoredStatement {
  std::string article_id;
  std::string statement_id;
  int run = 0;
  ScoreVector scores;
  std::string scorer_id;
  /// Set when every attempt produced an unusable response; scores are all NA.
  bool failed = false;

  friend bool operator==(const ScoredStatement&, const ScoredStatement&) = default;
};

using ScoreSet = std::vector<ScoredStatement>;

/// Scorer id as recorded on results: model identity plus prompt version.
std::string scorer_id_for(const Scorer& scorer, const PromptTemplate& tmpl);

/// Scores keyed by (statement content hash, scorer id, run), so statements
/// keep their scores when a corpus is re-extracted under new ids. Failed
/// attempts are never stored.
class ScoreCache {
 public:
  /// In-memory only.
  ScoreCache() = default;
  explicit ScoreCache(std::filesystem::path path) : store_(std::move(path)) {}

  std::optional<ScoreVector> get(std::string_view text, const std::string& scorer_id, int run) const;
  void put(std::string_view text, const std::string& scorer_id, int run, const ScoreVector& scores);
  std::size_t size() const { return store_.size(); }

 private:
  KeyValueCache store_;
};

struct ScoringPolicy {
  /// Extra attempts after the first unusable response.
  int retries = 3;
  Backoff backoff;
};

/// Returns the cached result when present. Otherwise asks the scorer and
/// parses the reply, retrying unusable replies up to `policy.retries` times
/// with backoff; after that the result is all-NA with `failed` set. AuthError
/// and TransportError from the scorer propagate.
ScoredStatement score_statement(Scorer& scorer, const PromptTemplate& tmpl, ScoreCache* cache,
                                const std::string& article_id, const Statement& statement, int run,
                                const ScoringPolicy& policy = {});

struct BatchOptions {
  int runs = 1;
  /// Upper bound on simultaneous scorer invocations.
  int concurrency = 4;
  ScoringPolicy policy;
};

/// Every statement of every article for runs 0..runs-1, ordered by run, then
/// corpus order. The first AuthError/TransportError stops the batch and is
/// rethrown; unusable replies never do.
ScoreSet score_corpus(const Corpus& corpus, Scorer& scorer, const PromptTemplate& tmpl, ScoreCache* cache,
                      const BatchOptions& options = {});

struct CriterionSummary {
  std::optional<double> mean;  // over present values; NA when none
  std::size_t present = 0;
  std::size_t na_count = 0;
};

/// Per-criterion mean and NA count. Throws EmptyInput for an empty list.
std::array<CriterionSummary, kCriterionCount> criterion_averages(std::span<const ScoredStatement> scores);

/// Records of one run, in input order.
ScoreSet filter_run(std::span<const ScoredStatement> scores, int run);

/// Scores file: one JSON record per line.
std::string serialize_scores(std::span<const ScoredStatement> scores);
/// Throws SchemaError on malformed records, out-of-range values, or a
/// repeated (article_id, statement_id, run, scorer_id).
ScoreSet parse_scores_text(std::string_view text);
void write_scores(const std::filesystem::path& path, std::span<const ScoredStatement> scores);
ScoreSet read_scores(const std::filesystem::path& path);

}  // namespace revalign
