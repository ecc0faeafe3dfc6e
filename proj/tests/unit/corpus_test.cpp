// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include <gtest/gtest.h>

#include "revalign/corpus.hpp"
#include "revalign/errors.hpp"
#include "support/generators.hpp"
#include "support/temp_dir.hpp"

namespace revalign {
namespace {

using namespace std::chrono;

const char* const kArticle =
    R"({"article_id":"a1","title":"T","published":"2020-01-02","doi":"10.1000/xyz","statements":[)"
    R"({"statement_id":"s1","reviewer":"R","text":"A statement that is long enough."},)"
    R"({"statement_id":"s2","text":"Another statement, reviewer unknown."}]})";

std::size_t schema_line(std::string_view text) {
  try {
    parse_corpus_text(text);
  } catch (const SchemaError& e) {
    return e.line();
  }
  return 0;
}

TEST(Corpus, ParsesArticleWithOptionalReviewer) {
  const auto c = parse_corpus_text(std::string(kArticle) + "\n", "label");
  ASSERT_EQ(c.articles.size(), 1u);
  const auto& a = c.articles[0];
  EXPECT_EQ(a.doi, "10.1000/xyz");
  EXPECT_EQ(a.published, year{2020} / January / 2);
  EXPECT_EQ(a.statements[0].reviewer, "R");
  EXPECT_FALSE(a.statements[1].reviewer);
  EXPECT_EQ(c.source_label, "label");
  EXPECT_EQ(c.statement_count(), 2u);
  EXPECT_NE(c.find("a1"), nullptr);
  EXPECT_EQ(c.find("zz"), nullptr);
}

TEST(Corpus, HeaderLineSetsMetadata) {
  const auto c = parse_corpus_text(
      std::string(R"({"source_label":"smc","extracted_at":"2026-01-15T09:00:00Z"})") + "\n" + kArticle + "\n", "x");
  EXPECT_EQ(c.source_label, "smc");
  ASSERT_TRUE(c.extracted_at);
  EXPECT_EQ(format_timestamp(*c.extracted_at), "2026-01-15T09:00:00Z");
}

TEST(Corpus, ErrorsCarryLineNumbers) {
  const std::string a(kArticle);
  EXPECT_EQ(schema_line(a + "\n" + a + "\n"), 2u);  // duplicate article id
  EXPECT_EQ(schema_line(a + "\n\n{not json\n"), 3u);
  EXPECT_EQ(schema_line(R"({"article_id":"x","title":"T","published":"2020-01-02","statements":[]})"), 1u);
  EXPECT_EQ(schema_line(a + "\n" + R"({"source_label":"late"})" + "\n"), 2u);
}

TEST(Corpus, RejectsInvalidArticles) {
  auto bad = [](std::string_view from, std::string_view to) {
    std::string s(kArticle);
    s.replace(s.find(from), from.size(), to);
    return schema_line(s) == 1u;
  };
  EXPECT_TRUE(bad("\"2020-01-02\"", "\"2020-13-02\""));
  EXPECT_TRUE(bad("\"10.1000/xyz\"", "\"https://doi.org/10.1000/xyz\""));
  EXPECT_TRUE(bad("\"s2\"", "\"s1\""));
  EXPECT_TRUE(bad("A statement that is long enough.", "too short"));
  EXPECT_TRUE(bad("\"a1\"", "\"  \""));
  EXPECT_TRUE(bad(R"("statements":[)", R"("statements":[{"statement_id":"s0","text":"   "},)"));
}

TEST(Corpus, NullDoiAndUnknownKeysAccepted) {
  std::string s(kArticle);
  s.replace(s.find("\"10.1000/xyz\""), 13, "null");
  s.insert(1, R"("extra":1,)");
  const auto c = parse_corpus_text(s);
  EXPECT_FALSE(c.articles.at(0).doi);
}

TEST(Corpus, MinimumLengthIsConfigurable) {
  std::string s(kArticle);
  s.replace(s.find("A statement that is long enough."), 32, "tiny text");
  EXPECT_THROW(parse_corpus_text(s), SchemaError);
  EXPECT_NO_THROW(parse_corpus_text(s, {}, CorpusOptions{5}));
}

Corpus random_corpus(testing::Rng& rng) {
  Corpus c;
  c.source_label = "gen-" + std::to_string(testing::uniform_int(rng, 0, 99));
  if (testing::chance(rng, 0.5)) c.extracted_at = sys_seconds{seconds{testing::uniform_int(rng, 0, 2'000'000'000)}};
  const int n = testing::uniform_int(rng, 0, 6);
  for (int i = 0; i < n; ++i) {
    RicArticle a;
    a.article_id = "art-" + std::to_string(i);
    a.title = testing::random_sentence(rng, 10);
    a.published = year{testing::uniform_int(rng, 2000, 2030)} / testing::uniform_int(rng, 1, 12) /
                  testing::uniform_int(rng, 1, 28);
    if (testing::chance(rng, 0.7)) a.doi = "10.1000/gen." + std::to_string(i);
    const int m = testing::uniform_int(rng, 1, 5);
    for (int j = 0; j < m; ++j) {
      Statement s{"s" + std::to_string(j + 1), std::nullopt, testing::random_sentence(rng)};
      if (testing::chance(rng, 0.6)) s.reviewer = "Dr. " + std::to_string(j);
      a.statements.push_back(std::move(s));
    }
    c.articles.push_back(std::move(a));
  }
  return c;
}

TEST(CorpusProperty, SerializeParseRoundTrip) {
  testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto c = random_corpus(rng);
    const auto text = serialize_corpus(c);
    const auto back = parse_corpus_text(text);
    ASSERT_EQ(back, c) << text;
    ASSERT_EQ(serialize_corpus(back), text);
  }
}

TEST(Corpus, WriteAndParseFile) {
  testing::TempDir dir;
  testing::Rng rng(3);
  auto c = random_corpus(rng);
  c.source_label = "file";
  write_corpus(dir / "c.jsonl", c);
  EXPECT_EQ(parse_corpus(dir / "c.jsonl"), c);
  EXPECT_THROW(parse_corpus(dir / "missing.jsonl"), IoError);
}

TEST(Corpus, BundledSyntheticCorpus) {
  const auto c = parse_corpus(testing::source_dir() / "data/synthetic/corpus.jsonl");
  EXPECT_EQ(c.articles.size(), 10u);
  EXPECT_EQ(c.statement_count(), 37u);
  std::size_t without_doi = 0, single = 0;
  for (const auto& a : c.articles) {
    without_doi += !a.doi;
    single += a.statements.size() == 1;
  }
  EXPECT_GE(without_doi, 1u);
  EXPECT_GE(single, 1u);
}

}  // namespace
}  // namespace revalign
