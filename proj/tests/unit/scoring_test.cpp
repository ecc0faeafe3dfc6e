// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include <gtest/gtest.h>

#include <atomic>
#include <mutex>
#include <thread>

#include "revalign/errors.hpp"
#include "revalign/prompt.hpp"
#include "revalign/scoring.hpp"
#include "support/generators.hpp"
#include "support/temp_dir.hpp"

namespace revalign {
namespace {

using namespace std::chrono_literals;

const ScoringPolicy kFast{3, Backoff{0ms, 2.0}};

/// Replies from a fixed script, then repeats the last entry.
class ScriptedScorer final : public Scorer {
 public:
  explicit ScriptedScorer(std::vector<std::string> replies) : replies_(std::move(replies)) {}
  std::string id() const override { return "scripted"; }
  std::string respond(const ScoreRequest&) override {
    std::lock_guard lock(mutex_);
    const auto i = std::min(calls_++, replies_.size() - 1);
    return replies_[i];
  }
  std::size_t calls() const { return calls_; }

 private:
  std::vector<std::string> replies_;
  std::size_t calls_ = 0;
  std::mutex mutex_;
};

/// Mock scorer that records how many calls overlap.
class SlowScorer final : public Scorer {
 public:
  explicit SlowScorer(std::chrono::milliseconds latency) : latency_(latency) {}
  std::string id() const override { return "slow"; }
  std::string respond(const ScoreRequest& r) override {
    const int now = ++in_flight_;
    int seen = peak_.load();
    while (now > seen && !peak_.compare_exchange_weak(seen, now)) {
    }
    std::this_thread::sleep_for(latency_);
    --in_flight_;
    ++calls_;
    return score_vector_json(mock_score(r.statement_text, r.run, 1));
  }
  int peak() const { return peak_; }
  int calls() const { return calls_; }

 private:
  std::chrono::milliseconds latency_;
  std::atomic<int> in_flight_{0}, peak_{0}, calls_{0};
};

class ThrowingScorer final : public Scorer {
 public:
  std::string id() const override { return "throwing"; }
  std::string respond(const ScoreRequest&) override { throw TransportError("connection refused"); }
};

const Statement kStatement{"s1", std::nullopt, "The trial was well designed."};

Corpus small_corpus(int articles, int statements_each) {
  Corpus c;
  for (int a = 0; a < articles; ++a) {
    RicArticle art;
    art.article_id = "a" + std::to_string(a);
    for (int s = 0; s < statements_each; ++s) {
      art.statements.push_back({"s" + std::to_string(s + 1), std::nullopt,
                                "Statement " + std::to_string(s) + " on article " + std::to_string(a)});
    }
    c.articles.push_back(std::move(art));
  }
  return c;
}

TEST(ScoreStatement, RetriesUntilUsable) {
  ScriptedScorer scorer({"no json", R"({"K0": 3})", R"({"K0":0.5,"K1":0.5,"K2":0.5,"K3":0.5,"K4":0.5,"K5":null})"});
  const auto r = score_statement(scorer, default_prompt_template(), nullptr, "a", kStatement, 0, kFast);
  EXPECT_FALSE(r.failed);
  EXPECT_EQ(scorer.calls(), 3u);
  EXPECT_EQ(r.scores[Criterion::K0], 0.5);
  EXPECT_EQ(r.article_id, "a");
  EXPECT_EQ(r.statement_id, "s1");
  EXPECT_EQ(r.scorer_id, "scripted/" + default_prompt_template().version());
}

TEST(ScoreStatement, ExhaustionGivesFlaggedAllNa) {
  ScriptedScorer scorer({"nothing useful"});
  const auto r = score_statement(scorer, default_prompt_template(), nullptr, "a", kStatement, 0, kFast);
  EXPECT_TRUE(r.failed);
  EXPECT_TRUE(r.scores.all_na());
  EXPECT_EQ(scorer.calls(), 4u);
}

TEST(ScoreStatement, TransportErrorsPropagate) {
  ThrowingScorer scorer;
  EXPECT_THROW(score_statement(scorer, default_prompt_template(), nullptr, "a", kStatement, 0, kFast),
               TransportError);
}

TEST(ScoreStatement, CacheHitSkipsScorer) {
  testing::TempDir dir;
  MockScorer mock(42);
  ScoredStatement first;
  {
    ScoreCache cache(dir / "scores.jsonl");
    first = score_statement(mock, default_prompt_template(), &cache, "a", kStatement, 0, kFast);
    EXPECT_EQ(cache.size(), 1u);
  }
  ScoreCache cache(dir / "scores.jsonl");
  ScriptedScorer never({"garbage"});
  // Same id as the mock is required for a hit; a different scorer misses.
  const auto miss = score_statement(never, default_prompt_template(), &cache, "a", kStatement, 0, kFast);
  EXPECT_TRUE(miss.failed);
  EXPECT_EQ(cache.size(), 1u);  // failures are not cached
  const auto hit = score_statement(mock, default_prompt_template(), &cache, "a", kStatement, 0, kFast);
  EXPECT_EQ(hit, first);
}

TEST(ScoreCache, KeyIncludesRunAndScorer) {
  ScoreCache cache;
  ScoreVector v;
  v.set(Criterion::K1, 0.25);
  cache.put("text", "id", 0, v);
  EXPECT_EQ(cache.get("text", "id", 0), v);
  EXPECT_FALSE(cache.get("text", "id", 1));
  EXPECT_FALSE(cache.get("text", "other", 0));
  EXPECT_FALSE(cache.get("text!", "id", 0));
}

TEST(ScoreCorpus, OrderedByRunThenCorpus) {
  const auto corpus = small_corpus(3, 2);
  MockScorer mock(1);
  const auto scores = score_corpus(corpus, mock, default_prompt_template(), nullptr, {2, 4, kFast});
  ASSERT_EQ(scores.size(), 12u);
  EXPECT_EQ(scores[0].run, 0);
  EXPECT_EQ(scores[0].article_id, "a0");
  EXPECT_EQ(scores[1].statement_id, "s2");
  EXPECT_EQ(scores[6].run, 1);
  EXPECT_EQ(scores[11].article_id, "a2");
  for (const auto& s : scores) {
    const auto& text = corpus.find(s.article_id)->statements.at(std::stoi(s.statement_id.substr(1)) - 1).text;
    EXPECT_EQ(s.scores, mock_score(text, s.run, 1));
  }
}

TEST(ScoreCorpus, ConcurrencyIsBounded) {
  const auto corpus = small_corpus(4, 5);
  SlowScorer slow(20ms);
  const auto start = std::chrono::steady_clock::now();
  const auto scores = score_corpus(corpus, slow, default_prompt_template(), nullptr, {1, 4, kFast});
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(scores.size(), 20u);
  EXPECT_LE(slow.peak(), 4);
  EXPECT_GE(slow.peak(), 2);
  EXPECT_LT(elapsed, 400ms);
}

TEST(ScoreCorpus, WarmCacheMakesNoCalls) {
  const auto corpus = small_corpus(2, 3);
  ScoreCache cache;
  SlowScorer slow(1ms);
  const auto cold = score_corpus(corpus, slow, default_prompt_template(), &cache, {2, 2, kFast});
  EXPECT_EQ(slow.calls(), 12);
  const auto warm = score_corpus(corpus, slow, default_prompt_template(), &cache, {2, 2, kFast});
  EXPECT_EQ(slow.calls(), 12);
  EXPECT_EQ(cold, warm);
}

TEST(ScoreCorpus, UnusableRepliesNeverAbort) {
  const auto corpus = small_corpus(3, 3);
  ScriptedScorer junk({"{\"K0\": 2}"});
  const auto scores = score_corpus(corpus, junk, default_prompt_template(), nullptr, {1, 3, kFast});
  ASSERT_EQ(scores.size(), 9u);
  for (const auto& s : scores) {
    EXPECT_TRUE(s.failed);
    EXPECT_TRUE(s.scores.all_na());
  }
}

TEST(ScoreCorpus, TransportFailureStopsBatch) {
  ThrowingScorer scorer;
  EXPECT_THROW(score_corpus(small_corpus(2, 2), scorer, default_prompt_template(), nullptr, {1, 2, kFast}),
               TransportError);
}

ScoredStatement record(std::string article, std::string statement, int run, ScoreVector::Values values) {
  return {std::move(article), std::move(statement), run, ScoreVector(values), "x", false};
}

TEST(CriterionAverages, MeansAndNaCounts) {
  const ScoreSet s{record("a", "s1", 0, {0.8, std::nullopt, 0.5, 1.0, 0.0, std::nullopt}),
                   record("a", "s2", 0, {0.6, std::nullopt, std::nullopt, 0.0, 0.0, std::nullopt})};
  const auto avg = criterion_averages(s);
  EXPECT_DOUBLE_EQ(*avg[0].mean, 0.7);
  EXPECT_EQ(avg[0].present, 2u);
  EXPECT_FALSE(avg[1].mean);
  EXPECT_EQ(avg[1].na_count, 2u);
  EXPECT_DOUBLE_EQ(*avg[2].mean, 0.5);
  EXPECT_EQ(avg[2].na_count, 1u);
  EXPECT_THROW(criterion_averages(ScoreSet{}), EmptyInput);
}

TEST(CriterionAveragesProperty, PermutationInvariantBitForBit) {
  testing::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    ScoreSet s;
    const int n = testing::uniform_int(rng, 1, 30);
    for (int j = 0; j < n; ++j) {
      ScoreVector::Values v;
      for (auto& x : v) {
        if (!testing::chance(rng, 0.3)) x = testing::uniform_real(rng, 0, 1);
      }
      s.push_back(record("a", "s" + std::to_string(j), 0, v));
    }
    const auto before = criterion_averages(s);
    std::shuffle(s.begin(), s.end(), rng);
    const auto after = criterion_averages(s);
    for (std::size_t k = 0; k < kCriterionCount; ++k) ASSERT_EQ(before[k].mean, after[k].mean);
  }
}

TEST(ScoresFile, RoundTripAndValidation) {
  testing::TempDir dir;
  ScoreSet s{record("a", "s1", 0, {0.8, std::nullopt, 0.5, 1.0, 0.0, 0.33}),
             record("a", "s1", 1, {std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt})};
  s[1].failed = true;
  write_scores(dir / "s.jsonl", s);
  EXPECT_EQ(read_scores(dir / "s.jsonl"), s);

  const auto text = serialize_scores(s);
  const auto first_line = text.substr(0, text.find('\n') + 1);
  EXPECT_THROW(parse_scores_text(first_line + first_line), SchemaError);
  EXPECT_THROW(parse_scores_text("{\"article_id\":\"a\"}\n"), SchemaError);
  auto out_of_range = first_line;
  out_of_range.replace(out_of_range.find("0.8"), 3, "1.8");
  EXPECT_THROW(parse_scores_text(out_of_range), SchemaError);
  EXPECT_EQ(filter_run(s, 1).size(), 1u);
}

}  // namespace
}  // namespace revalign
