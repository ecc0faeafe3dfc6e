// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include <gtest/gtest.h>

#include "revalign/errors.hpp"
#include "revalign/response_parser.hpp"
#include "support/generators.hpp"

namespace revalign {
namespace {

constexpr const char* kValid = R"({"K0":0.8,"K1":null,"K2":0.5,"K3":1,"K4":0,"K5":"NA"})";

TEST(ResponseParser, ParsesValidObject) {
  const auto v = parse_score_response(kValid);
  EXPECT_EQ(v[Criterion::K0], 0.8);
  EXPECT_FALSE(v[Criterion::K1]);
  EXPECT_EQ(v[Criterion::K3], 1.0);
  EXPECT_EQ(v[Criterion::K4], 0.0);
  EXPECT_FALSE(v[Criterion::K5]);
}

TEST(ResponseParser, ToleratesProseAndCodeFences) {
  const std::string wrapped = std::string("Sure! Here are the scores:\n```json\n") + kValid + "\n```\nHope this helps {:}";
  EXPECT_EQ(parse_score_response(wrapped), parse_score_response(kValid));
}

TEST(ResponseParser, SkipsObjectsWithoutCriteria) {
  const std::string raw = std::string(R"(Reasoning: {"note": "a } inside a string"} then )") + kValid;
  EXPECT_EQ(parse_score_response(raw), parse_score_response(kValid));
}

TEST(ResponseParser, OutOfRange) {
  try {
    parse_score_response(R"({"K0":1.2,"K1":0,"K2":0,"K3":0,"K4":0,"K5":0})");
    FAIL();
  } catch (const OutOfRangeScore& e) {
    EXPECT_EQ(e.key(), "K0");
    EXPECT_DOUBLE_EQ(e.value(), 1.2);
  }
  EXPECT_THROW(parse_score_response(R"({"K0":-0.1,"K1":0,"K2":0,"K3":0,"K4":0,"K5":0})"), OutOfRangeScore);
  EXPECT_THROW(parse_score_response(R"({"K0":0,"K1":0,"K2":0,"K3":0,"K4":0,"K5":7})"), OutOfRangeScore);
}

TEST(ResponseParser, MissingKey) {
  try {
    parse_score_response(R"({"K0":0.1,"K1":0,"K2":0,"K4":0,"K5":0})");
    FAIL();
  } catch (const MissingKey& e) {
    EXPECT_EQ(e.key(), "K3");
  }
  EXPECT_THROW(parse_score_response(R"({"score": 0.5})"), MissingKey);
}

TEST(ResponseParser, Malformed) {
  EXPECT_THROW(parse_score_response(""), MalformedResponse);
  EXPECT_THROW(parse_score_response("I cannot rate this statement."), MalformedResponse);
  EXPECT_THROW(parse_score_response(R"({"K0":0.1,"K1":0)"), MalformedResponse);
  EXPECT_THROW(parse_score_response(R"({"K0":"high","K1":0,"K2":0,"K3":0,"K4":0,"K5":0})"), MalformedResponse);
  EXPECT_THROW(parse_score_response(R"({"K0":[0.5],"K1":0,"K2":0,"K3":0,"K4":0,"K5":0})"), MalformedResponse);
  EXPECT_THROW(parse_score_response(R"({"K0":true,"K1":0,"K2":0,"K3":0,"K4":0,"K5":0})"), MalformedResponse);
}

TEST(ResponseParser, AllErrorsShareABase) {
  for (const char* raw : {"", "{\"K0\":9,\"K1\":0,\"K2\":0,\"K3\":0,\"K4\":0,\"K5\":0}", "{\"K0\":0}"}) {
    EXPECT_THROW(parse_score_response(raw), ResponseError) << raw;
  }
}

// Random mutations of valid responses: the parser either throws a
// ResponseError or returns values inside [0, 1].
TEST(ResponseParserProperty, NeverEmitsOutOfRangeValues) {
  testing::Rng rng(99);
  const std::string pieces[] = {"{", "}", "\"K0\"", "\"K3\"", ":", ",", "1.5", "-2", "0.25", "null", "\"NA\"",
                                "1e400", "NaN", "Infinity", "\"", "\\", "[", "]", "prose ", kValid};
  std::size_t parsed = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string raw;
    const int n = testing::uniform_int(rng, 0, 12);
    for (int j = 0; j < n; ++j) raw += pieces[testing::uniform_int(rng, 0, static_cast<int>(std::size(pieces)) - 1)];
    try {
      const auto v = parse_score_response(raw);
      ++parsed;
      for (const auto& x : v.values()) {
        if (x) {
          ASSERT_GE(*x, 0.0) << raw;
          ASSERT_LE(*x, 1.0) << raw;
        }
      }
    } catch (const ResponseError&) {
    }
  }
  EXPECT_GT(parsed, 0u);
}

}  // namespace
}  // namespace revalign
