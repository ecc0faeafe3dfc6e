// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include <gtest/gtest.h>

#include <cmath>

#include "revalign/errors.hpp"
#include "revalign/hash.hpp"
#include "revalign/text.hpp"
#include "support/temp_dir.hpp"

namespace revalign {
namespace {

using namespace std::chrono;

TEST(FormatFixed, RoundsHalfUpOnTheDecimalItPrintsAs) {
  EXPECT_EQ(format_fixed(298.2093, 1), "298.2");
  EXPECT_EQ(format_fixed(0.15, 1), "0.2");
  EXPECT_EQ(format_fixed(2.675, 2), "2.68");
  EXPECT_EQ(format_fixed(0.05, 1), "0.1");
  EXPECT_EQ(format_fixed(9.95, 1), "10.0");
  EXPECT_EQ(format_fixed(99.96, 1), "100.0");
}

TEST(FormatFixed, Negative) {
  EXPECT_EQ(format_fixed(-0.05, 1), "-0.1");
  EXPECT_EQ(format_fixed(-0.04, 1), "0.0");
  EXPECT_EQ(format_fixed(-0.38345, 4), "-0.3835");
}

TEST(FormatFixed, ZeroDecimalsAndIntegers) {
  EXPECT_EQ(format_fixed(12.5, 0), "13");
  EXPECT_EQ(format_fixed(12.0, 3), "12.000");
  EXPECT_EQ(format_fixed(0.0, 2), "0.00");
  EXPECT_EQ(format_fixed(1e-9, 4), "0.0000");
}

TEST(FormatFixed, NonFinite) {
  EXPECT_EQ(format_fixed(std::nan(""), 1), "nan");
  EXPECT_EQ(format_fixed(INFINITY, 1), "inf");
}

TEST(Text, TrimLowerCount) {
  EXPECT_EQ(trim("  a b \t\n"), "a b");
  EXPECT_EQ(trim("   "), "");
  EXPECT_EQ(to_lower("10.1038/NBT"), "10.1038/nbt");
  EXPECT_EQ(count_non_whitespace(" a b\tc\n"), 3u);
}

TEST(Text, CollapseWhitespace) {
  EXPECT_EQ(collapse_whitespace("  one \n\t two  three "), "one two three");
  EXPECT_EQ(collapse_whitespace(""), "");
}

TEST(Text, SplitKeepsEmptyFields) {
  EXPECT_EQ(split("a,,b", ','), (std::vector<std::string>{"a", "", "b"}));
  EXPECT_EQ(split("", ','), (std::vector<std::string>{""}));
}

TEST(Dates, ParseAndFormat) {
  const auto d = parse_date("2019-03-14");
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, year{2019} / March / 14);
  EXPECT_EQ(format_date(*d), "2019-03-14");
  EXPECT_FALSE(parse_date("2019-02-30"));
  EXPECT_FALSE(parse_date("2019-3-14"));
  EXPECT_FALSE(parse_date("14.03.2019"));
  EXPECT_FALSE(parse_date(""));
}

TEST(Timestamps, RoundTrip) {
  const auto t = parse_timestamp("2026-01-15T09:00:00Z");
  ASSERT_TRUE(t);
  EXPECT_EQ(format_timestamp(*t), "2026-01-15T09:00:00Z");
  EXPECT_FALSE(parse_timestamp("2026-01-15 09:00:00"));
  EXPECT_FALSE(parse_timestamp("yesterday"));
}

TEST(Files, WriteThenRead) {
  testing::TempDir dir;
  const auto p = dir / "sub/x.txt";
  write_file(p, "hello\nworld");
  EXPECT_EQ(read_file(p), "hello\nworld");
  write_file(p, "again");
  EXPECT_EQ(read_file(p), "again");
  EXPECT_THROW(read_file(dir / "missing"), IoError);
}

TEST(Hash, KnownDigest) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace revalign
