// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include <gtest/gtest.h>

#include "revalign/errors.hpp"
#include "revalign/extraction.hpp"
#include "revalign/pipeline.hpp"
#include "support/temp_dir.hpp"

namespace revalign {
namespace {

namespace fs = std::filesystem;
using namespace std::chrono;

fs::path html_dir() { return testing::source_dir() / "data/html"; }

ExtractionConfig fixture_config() { return ExtractionConfig::load(html_dir() / "extraction.conf"); }

TEST(Extraction, StatementsWithReviewersAndExclusions) {
  const auto statements = extract_statements(
      "<div class=s><b class=who>Dr. A</b><p>First opinion text.</p></div>"
      "<blockquote class=pq>Quoted again.</blockquote>"
      "<div class=s><p>Second, without name.</p><blockquote class=pq>inner quote</blockquote></div>"
      "<div class=s>   </div>",
      ExtractionConfig::from_selectors("div.s", ".who", "blockquote.pq"));
  ASSERT_EQ(statements.size(), 2u);
  EXPECT_EQ(statements[0].statement_id, "s1");
  EXPECT_EQ(statements[0].reviewer, "Dr. A");
  EXPECT_EQ(statements[0].text, "First opinion text.");
  EXPECT_EQ(statements[1].statement_id, "s2");
  EXPECT_FALSE(statements[1].reviewer);
  EXPECT_EQ(statements[1].text, "Second, without name.");
}

TEST(Extraction, ExcludedContainerIsDropped) {
  const auto statements = extract_statements("<div class=s>kept</div><aside><div class=s>teaser</div></aside>",
                                             ExtractionConfig::from_selectors("div.s", "", "aside"));
  ASSERT_EQ(statements.size(), 1u);
  EXPECT_EQ(statements[0].text, "kept");
}

TEST(Extraction, NoContainerIsAnError) {
  EXPECT_THROW(extract_statements("<p>nothing</p>", ExtractionConfig::from_selectors("div.s")), ExtractionError);
}

TEST(Extraction, FixturePageWithPullQuote) {
  const auto a = extract_article(read_file(html_dir() / "ric-2023-011.html"), fixture_config(), "ric-2023-011");
  EXPECT_EQ(a.title, "Wearable sensors predict Parkinson's disease years before diagnosis");
  EXPECT_EQ(a.published, year{2023} / July / 3);
  EXPECT_EQ(a.doi, "10.1038/s41591-023-02440-2");
  ASSERT_EQ(a.statements.size(), 4u);
  EXPECT_EQ(a.statements[2].reviewer, "Prof. Dr. Günter Höglinger");
  for (const auto& s : a.statements) {
    EXPECT_EQ(s.text.find("promising but very early"), std::string::npos);
    EXPECT_EQ(s.text.find("Teaser"), std::string::npos);
    EXPECT_EQ(s.text.find("Prof. Dr."), std::string::npos);
  }
  EXPECT_NO_THROW(validate_article(a));
}

TEST(Extraction, FixtureAverageStatementCount) {
  std::size_t pages = 0, statements = 0;
  for (const char* page : {"ric-2023-011", "ric-2023-012", "ric-2024-013"}) {
    const auto a = extract_article(read_file(html_dir() / (std::string(page) + ".html")), fixture_config(), page);
    ++pages;
    statements += a.statements.size();
  }
  EXPECT_EQ(statements, 12u);
  EXPECT_DOUBLE_EQ(static_cast<double>(statements) / pages, 4.0);
}

TEST(Extraction, DateFallbacksAndMissingDoi) {
  const auto config = ExtractionConfig::from_selectors("div.s");
  const auto a = extract_article("<h1>T</h1><time>2024-02-12</time><div class=s>Statement text here.</div>", config,
                                 "x");
  EXPECT_EQ(a.published, year{2024} / February / 12);
  EXPECT_FALSE(a.doi);
  EXPECT_THROW(extract_article("<h1>T</h1><div class=s>text</div>", config, "x"), ExtractionError);
  EXPECT_THROW(extract_article("<time>soon</time><div class=s>text</div>", config, "x"), ExtractionError);
}

TEST(ExtractCommand, ThreePagesGiveThreeArticles) {
  testing::TempDir dir;
  const auto summary = cmd_extract(html_dir(), fixture_config(), dir / "corpus.jsonl", false);
  EXPECT_EQ(summary.failures(), 0u);
  EXPECT_TRUE(summary.corpus_written);
  const auto c = parse_corpus(dir / "corpus.jsonl");
  ASSERT_EQ(c.articles.size(), 3u);
  EXPECT_EQ(c.articles[0].article_id, "ric-2023-011");
  EXPECT_EQ(c.source_label, "html");
  EXPECT_TRUE(c.extracted_at);
}

TEST(ExtractCommand, EmptyDirectory) {
  testing::TempDir dir;
  fs::create_directories(dir / "empty");
  try {
    cmd_extract(dir / "empty", fixture_config(), dir / "c.jsonl", false);
    FAIL();
  } catch (const ExtractionError& e) {
    EXPECT_NE(std::string(e.what()).find("no input pages"), std::string::npos);
  }
}

TEST(ExtractCommand, BrokenPageAndKeepPartial) {
  testing::TempDir dir;
  fs::create_directories(dir / "pages");
  for (const char* page : {"ric-2023-011.html", "ric-2023-012.html"}) {
    fs::copy_file(html_dir() / page, dir / "pages" / page);
  }
  write_file(dir / "pages/broken.html", "<html><body><p>Layout changed, nothing to find.</p></body></html>");

  auto summary = cmd_extract(dir / "pages", fixture_config(), dir / "strict.jsonl", false);
  EXPECT_EQ(summary.failures(), 1u);
  EXPECT_FALSE(summary.corpus_written);
  EXPECT_FALSE(fs::exists(dir / "strict.jsonl"));
  EXPECT_EQ(summary.pages[0].page.filename(), "broken.html");
  EXPECT_FALSE(summary.pages[0].error.empty());

  summary = cmd_extract(dir / "pages", fixture_config(), dir / "partial.jsonl", true);
  EXPECT_TRUE(summary.corpus_written);
  EXPECT_EQ(parse_corpus(dir / "partial.jsonl").articles.size(), 2u);
}

TEST(ExtractionConfig, LoadRequiresStatementSelector) {
  testing::TempDir dir;
  write_file(dir / "x.conf", "reviewer_selector = b\n");
  EXPECT_THROW(ExtractionConfig::load(dir / "x.conf"), ConfigError);
  write_file(dir / "y.conf", "statement_selector = div >\n");
  EXPECT_THROW(ExtractionConfig::load(dir / "y.conf"), ConfigError);
}

}  // namespace
}  // namespace revalign
