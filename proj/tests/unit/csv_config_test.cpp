// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include <gtest/gtest.h>

#include "revalign/csv.hpp"
#include "revalign/errors.hpp"
#include "revalign/kv_config.hpp"

namespace revalign {
namespace {

TEST(Csv, QuotedFieldsAndBlankLines) {
  const auto t = csv::parse("a,b\n\"x, y\",\"he said \"\"hi\"\"\"\n\n1,2\r\n");
  EXPECT_EQ(t.header, (csv::Row{"a", "b"}));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0], (csv::Row{"x, y", "he said \"hi\""}));
  EXPECT_EQ(t.rows[1], (csv::Row{"1", "2"}));
  EXPECT_EQ(t.lines[1], 4u);
}

TEST(Csv, FieldCountMismatchReportsLine) {
  try {
    csv::parse("a,b\n1,2\n3\n");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Csv, EscapeRoundTrip) {
  const csv::Row row{"plain", "with,comma", "with \"quote\"", ""};
  const auto t = csv::parse("h1,h2,h3,h4\n" + csv::join(row) + "\n");
  EXPECT_EQ(t.rows.at(0), row);
  EXPECT_EQ(csv::escape("plain"), "plain");
}

TEST(KeyValueConfig, ParsesCommentsAndSpaces) {
  const auto kv = KeyValueConfig::parse("# comment\n  a = 1 \n\nb=two words\nc =\n");
  EXPECT_EQ(kv.get("a"), "1");
  EXPECT_EQ(kv.get("b"), "two words");
  EXPECT_EQ(kv.get("c"), "");
  EXPECT_FALSE(kv.get("d"));
  EXPECT_EQ(kv.get_or("d", "x"), "x");
}

TEST(KeyValueConfig, RejectsDuplicatesAndGarbage) {
  EXPECT_THROW(KeyValueConfig::parse("a=1\na=2\n"), ConfigError);
  EXPECT_THROW(KeyValueConfig::parse("just words\n"), ConfigError);
  EXPECT_THROW(KeyValueConfig::load("/nonexistent/revalign.conf"), ConfigError);
}

}  // namespace
}  // namespace revalign
