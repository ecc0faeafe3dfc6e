// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/scoring.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "revalign/errors.hpp"
#include "revalign/hash.hpp"
#include "revalign/response_parser.hpp"

namespace revalign {

using nlohmann::json;

namespace {

std::string cache_key(std::string_view text, const std::string& scorer_id, int run) {
  return sha256_hex(text) + "|" + scorer_id + "|" + std::to_string(run);
}

// Sum of sorted values: identical for every ordering of the input.
double ordered_mean(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

std::string scorer_id_for(const Scorer& scorer, const PromptTemplate& tmpl) {
  return scorer.id() + "/" + tmpl.version();
}

std::optional<ScoreVector> ScoreCache::get(std::string_view text, const std::string& scorer_id, int run) const {
  const auto hit = store_.get(cache_key(text, scorer_id, run));
  if (!hit) return std::nullopt;
  try {
    return parse_score_response(*hit);
  } catch (const ResponseError&) {
    return std::nullopt;
  }
}

void ScoreCache::put(std::string_view text, const std::string& scorer_id, int run, const ScoreVector& scores) {
  store_.put(cache_key(text, scorer_id, run), score_vector_json(scores));
}

ScoredStatement score_statement(Scorer& scorer, const PromptTemplate& tmpl, ScoreCache* cache,
                                const std::string& article_id, const Statement& statement, int run,
                                const ScoringPolicy& policy) {
  ScoredStatement result{article_id, statement.statement_id, run, ScoreVector{}, scorer_id_for(scorer, tmpl), false};
  if (cache) {
    if (auto hit = cache->get(statement.text, result.scorer_id, run)) {
      result.scores = *hit;
      return result;
    }
  }

  const auto prompt = build_prompt(tmpl, statement);
  const ScoreRequest request{prompt, statement.text, run};
  for (int attempt = 0; attempt <= policy.retries; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(policy.backoff.delay(attempt - 1));
    try {
      result.scores = parse_score_response(scorer.respond(request));
      if (cache) cache->put(statement.text, result.scorer_id, run, result.scores);
      return result;
    } catch (const ResponseError&) {
      // unusable reply; try again
    }
  }
  result.scores = ScoreVector{};
  result.failed = true;
  return result;
}

ScoreSet score_corpus(const Corpus& corpus, Scorer& scorer, const PromptTemplate& tmpl, ScoreCache* cache,
                      const BatchOptions& options) {
  if (options.runs < 1) throw ConfigError("runs must be at least 1");
  if (options.concurrency < 1) throw ConfigError("concurrency must be at least 1");

  struct Task {
    const RicArticle* article;
    const Statement* statement;
    int run;
  };
  std::vector<Task> tasks;
  for (int run = 0; run < options.runs; ++run) {
    for (const auto& article : corpus.articles) {
      for (const auto& statement : article.statements) tasks.push_back({&article, &statement, run});
    }
  }

  ScoreSet results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!stop.load()) {
      const auto i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] = score_statement(scorer, tmpl, cache, tasks[i].article->article_id, *tasks[i].statement,
                                     tasks[i].run, options.policy);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };

  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(options.concurrency), tasks.size());
  std::vector<std::jthread> pool;
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
  return results;
}

std::array<CriterionSummary, kCriterionCount> criterion_averages(std::span<const ScoredStatement> scores) {
  if (scores.empty()) throw EmptyInput("criterion_averages needs at least one scored statement");
  std::array<CriterionSummary, kCriterionCount> out{};
  for (std::size_t i = 0; i < kCriterionCount; ++i) {
    std::vector<double> values;
    for (const auto& s : scores) {
      if (const auto v = s.scores.at(i)) values.push_back(*v);
    }
    out[i].present = values.size();
    out[i].na_count = scores.size() - values.size();
    if (!values.empty()) out[i].mean = ordered_mean(values);
  }
  return out;
}

ScoreSet filter_run(std::span<const ScoredStatement> scores, int run) {
  ScoreSet out;
  std::copy_if(scores.begin(), scores.end(), std::back_inserter(out), [run](const auto& s) { return s.run == run; });
  return out;
}

}  // namespace revalign
