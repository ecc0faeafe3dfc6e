// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#pragma once

#include <string>
#include <string_view>

#include "revalign/corpus.hpp"

namespace revalign {

inline constexpr std::string_view kStatementBegin = "<<<STATEMENT>>>";
inline constexpr std::string_view kStatementEnd = "<<<END STATEMENT>>>";

/// Scoring instruction. The version embeds a hash of every fixed part of the
/// rendered prompt, so editing the wording always yields a new version and
/// scores from different versions never share cache entries.
class PromptTemplate {
 public:
  PromptTemplate(std::string name, std::string instruction);

  const std::string& name() const noexcept { return name_; }
  const std::string& instruction() const noexcept { return instruction_; }
  /// `<name>@<first 12 hex digits of sha256>`.
  const std::string& version() const noexcept { return version_; }

 private:
  std::string name_;
  std::string instruction_;
  std::string version_;
};

const PromptTemplate& default_prompt_template();

/// Instruction, the six criteria, the response contract, then the statement
/// between kStatementBegin/kStatementEnd. Any `<<<` inside the statement is
/// broken up so the text cannot forge a delimiter.
std::string build_prompt(const PromptTemplate& tmpl, const Statement& statement);

/// The escaping applied to statement text inside build_prompt.
std::string escape_statement_text(std::string_view text);

}  // namespace revalign
