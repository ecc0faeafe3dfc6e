// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/prompt.hpp"

#include "revalign/hash.hpp"
#include "revalign/score_vector.hpp"

namespace revalign {

namespace {

std::string criteria_block() {
  std::string out = "Criteria:\n";
  for (auto c : kAllCriteria) {
    out += criterion_key(c);
    out += ": ";
    out += criterion_description(c);
    out += '\n';
  }
  return out;
}

constexpr std::string_view kResponseContract =
    "Respond with exactly one JSON object with the keys \"K0\", \"K1\", \"K2\", \"K3\", \"K4\" and \"K5\" and no "
    "other keys. Each value must be a number between 0 and 1, or null when the statement does not contain enough "
    "information to judge that criterion. Values close to 0 mean the reviewer reports weaknesses or problems for the "
    "criterion; values close to 1 mean the criterion is fulfilled to the reviewer's satisfaction. Do not write "
    "anything outside the JSON object.\n";

std::string prefix_for(const PromptTemplate& tmpl) {
  std::string out = tmpl.instruction();
  out += "\n\n";
  out += criteria_block();
  out += '\n';
  out += kResponseContract;
  out += '\n';
  out += kStatementBegin;
  out += '\n';
  return out;
}

std::string suffix() {
  std::string out = "\n";
  out += kStatementEnd;
  out += '\n';
  return out;
}

}  // namespace

PromptTemplate::PromptTemplate(std::string name, std::string instruction)
    : name_(std::move(name)), instruction_(std::move(instruction)) {
  version_ = name_ + "@" + sha256_hex(prefix_for(*this) + suffix()).substr(0, 12);
}

const PromptTemplate& default_prompt_template() {
  static const PromptTemplate tmpl(
      "ric-criteria",
      "You are given one expert statement about a published scientific study. Rate what the statement says about "
      "the study along six review criteria. Judge only from the statement itself.");
  return tmpl;
}

std::string escape_statement_text(std::string_view text) {
  std::string out(text);
  // Split the leftmost run of three '<' until none is left.
  for (auto pos = out.find("<<<"); pos != std::string::npos; pos = out.find("<<<")) {
    out.insert(pos + 2, " ");
  }
  return out;
}

std::string build_prompt(const PromptTemplate& tmpl, const Statement& statement) {
  return prefix_for(tmpl) + escape_statement_text(statement.text) + suffix();
}

}  // namespace revalign
