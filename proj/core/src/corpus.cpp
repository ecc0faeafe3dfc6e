// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/corpus.hpp"

#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "revalign/doi.hpp"
#include "revalign/errors.hpp"

namespace revalign {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& require(const json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(line, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key, std::size_t line) {
  const auto& v = require(obj, key, line);
  if (!v.is_string()) throw SchemaError(line, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw SchemaError(line, std::string("field '") + key + "' must be a string or null");
  return it->get<std::string>();
}

Statement statement_from_json(const json& obj, std::size_t line) {
  if (!obj.is_object()) throw SchemaError(line, "statement must be an object");
  return Statement{require_string(obj, "statement_id", line), optional_string(obj, "reviewer", line),
                   require_string(obj, "text", line)};
}

RicArticle article_from_json(const json& obj, std::size_t line) {
  RicArticle a;
  a.article_id = require_string(obj, "article_id", line);
  a.title = require_string(obj, "title", line);
  const auto published = require_string(obj, "published", line);
  const auto date = parse_date(published);
  if (!date) throw SchemaError(line, "field 'published' is not a YYYY-MM-DD date: " + published);
  a.published = *date;
  if (!obj.contains("doi")) throw SchemaError(line, "missing field 'doi'");
  a.doi = optional_string(obj, "doi", line);
  const auto& statements = require(obj, "statements", line);
  if (!statements.is_array()) throw SchemaError(line, "field 'statements' must be an array");
  for (const auto& s : statements) a.statements.push_back(statement_from_json(s, line));
  return a;
}

bool is_header(const json& obj) { return !obj.contains("article_id") && obj.contains("source_label"); }

ordered_json article_to_json(const RicArticle& a) {
  ordered_json statements = ordered_json::array();
  for (const auto& s : a.statements) {
    statements.push_back({{"statement_id", s.statement_id},
                          {"reviewer", s.reviewer ? ordered_json(*s.reviewer) : ordered_json(nullptr)},
                          {"text", s.text}});
  }
  return {{"article_id", a.article_id},
          {"title", a.title},
          {"published", format_date(a.published)},
          {"doi", a.doi ? ordered_json(*a.doi) : ordered_json(nullptr)},
          {"statements", std::move(statements)}};
}

}  // namespace

const RicArticle* Corpus::find(std::string_view article_id) const {
  for (const auto& a : articles) {
    if (a.article_id == article_id) return &a;
  }
  return nullptr;
}

std::size_t Corpus::statement_count() const {
  std::size_t n = 0;
  for (const auto& a : articles) n += a.statements.size();
  return n;
}

void validate_article(const RicArticle& article, const CorpusOptions& options, std::size_t line) {
  if (trim(article.article_id).empty()) throw SchemaError(line, "empty article_id");
  if (!article.published.ok()) throw SchemaError(line, "article " + article.article_id + ": invalid date");
  if (article.doi && !is_normalized_doi(*article.doi)) {
    throw SchemaError(line, "article " + article.article_id + ": DOI not normalized: " + *article.doi);
  }
  std::unordered_set<std::string> ids;
  for (const auto& s : article.statements) {
    if (trim(s.statement_id).empty()) throw SchemaError(line, "article " + article.article_id + ": empty statement_id");
    if (!ids.insert(s.statement_id).second) {
      throw SchemaError(line, "article " + article.article_id + ": duplicate statement_id " + s.statement_id);
    }
    if (trim(s.text).empty()) {
      throw SchemaError(line, "article " + article.article_id + ", statement " + s.statement_id + ": empty text");
    }
    const auto chars = count_non_whitespace(s.text);
    if (chars < options.min_statement_chars) {
      throw SchemaError(line, "article " + article.article_id + ", statement " + s.statement_id + ": text has " +
                                  std::to_string(chars) + " non-whitespace characters, minimum is " +
                                  std::to_string(options.min_statement_chars));
    }
  }
}

Corpus parse_corpus_text(std::string_view text, std::string default_label, const CorpusOptions& options) {
  Corpus corpus;
  corpus.source_label = std::move(default_label);
  std::set<std::string> seen;
  std::size_t line_no = 0;
  bool first_record = true;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SchemaError(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw SchemaError(line_no, "record must be an object");
    if (is_header(obj)) {
      if (!first_record) throw SchemaError(line_no, "corpus header must be the first record");
      first_record = false;
      corpus.source_label = require_string(obj, "source_label", line_no);
      if (const auto at = optional_string(obj, "extracted_at", line_no)) {
        corpus.extracted_at = parse_timestamp(*at);
        if (!corpus.extracted_at) throw SchemaError(line_no, "field 'extracted_at' is not an ISO-8601 UTC timestamp");
      }
      continue;
    }
    first_record = false;
    RicArticle article = article_from_json(obj, line_no);
    validate_article(article, options, line_no);
    if (!seen.insert(article.article_id).second) {
      throw SchemaError(line_no, "duplicate article_id " + article.article_id);
    }
    corpus.articles.push_back(std::move(article));
  }
  return corpus;
}

Corpus parse_corpus(const std::filesystem::path& path, const CorpusOptions& options) {
  return parse_corpus_text(read_file(path), path.filename().string(), options);
}

std::string serialize_corpus(const Corpus& corpus) {
  std::ostringstream out;
  ordered_json header = {{"source_label", corpus.source_label}};
  header["extracted_at"] = corpus.extracted_at ? ordered_json(format_timestamp(*corpus.extracted_at)) : ordered_json();
  out << header.dump(-1, ' ', false, ordered_json::error_handler_t::replace) << '\n';
  for (const auto& a : corpus.articles) out << article_to_json(a).dump(-1, ' ', false, ordered_json::error_handler_t::replace) << '\n';
  return out.str();
}

void write_corpus(const std::filesystem::path& path, const Corpus& corpus) { write_file(path, serialize_corpus(corpus)); }

}  // namespace revalign
