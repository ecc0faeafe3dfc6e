// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/extraction.hpp"

#include <unordered_set>

#include "revalign/doi.hpp"
#include "revalign/errors.hpp"
#include "revalign/kv_config.hpp"

namespace revalign {

namespace {

using html::Node;

void mark_subtree(const Node& node, std::unordered_set<const Node*>& out) {
  out.insert(&node);
  for (const auto& child : node.children) mark_subtree(*child, out);
}

std::unordered_set<const Node*> excluded_nodes(const Node& root, const std::vector<html::Selector>& exclude) {
  std::unordered_set<const Node*> out;
  for (const auto& selector : exclude) {
    for (const Node* n : html::select_all(root, selector)) mark_subtree(*n, out);
  }
  return out;
}

const Node* first_visible(const Node& scope, const html::Selector& selector,
                          const std::unordered_set<const Node*>& excluded) {
  for (const Node* n : html::select_all(scope, selector)) {
    if (!excluded.count(n)) return n;
  }
  return nullptr;
}

std::vector<Statement> statements_in(const html::Document& doc, const ExtractionConfig& config,
                                     const std::unordered_set<const Node*>& excluded) {
  std::vector<Statement> out;
  for (const Node* container : html::select_all(doc.root(), config.statement)) {
    if (excluded.count(container)) continue;
    auto skip = excluded;
    std::optional<std::string> reviewer;
    if (config.reviewer) {
      if (const Node* name = first_visible(*container, *config.reviewer, excluded)) {
        const auto text = html::visible_text(*name, excluded);
        if (!text.empty()) reviewer = text;
        mark_subtree(*name, skip);
      }
    }
    auto text = html::visible_text(*container, skip);
    if (text.empty()) continue;
    out.push_back(Statement{"s" + std::to_string(out.size() + 1), std::move(reviewer), std::move(text)});
  }
  return out;
}

}  // namespace

ExtractionConfig ExtractionConfig::from_selectors(std::string_view statement_selector,
                                                  std::string_view reviewer_selector,
                                                  std::string_view exclude_selectors) {
  ExtractionConfig config{html::Selector::parse(statement_selector), std::nullopt, {}};
  if (!trim(reviewer_selector).empty()) config.reviewer = html::Selector::parse(reviewer_selector);
  if (!trim(exclude_selectors).empty()) {
    for (const auto& part : split(exclude_selectors, ',')) {
      if (trim(part).empty()) continue;
      config.exclude.push_back(html::Selector::parse(part));
    }
  }
  return config;
}

ExtractionConfig ExtractionConfig::load(const std::filesystem::path& path) {
  const auto kv = KeyValueConfig::load(path);
  const auto statement = kv.get("statement_selector");
  if (!statement) throw ConfigError(path.string() + ": missing statement_selector");
  auto config = from_selectors(*statement, kv.get_or("reviewer_selector", ""), kv.get_or("exclude_selectors", ""));
  if (const auto v = kv.get("title_selector")) config.title = html::Selector::parse(*v);
  if (const auto v = kv.get("date_selector")) config.date = html::Selector::parse(*v);
  if (const auto v = kv.get("doi_selector")) config.doi = html::Selector::parse(*v);
  return config;
}

std::vector<Statement> extract_statements(std::string_view html, const ExtractionConfig& config) {
  const auto doc = html::Document::parse(html);
  auto statements = statements_in(doc, config, excluded_nodes(doc.root(), config.exclude));
  if (statements.empty()) {
    throw ExtractionError("no statement container matches '" + config.statement.source() + "'");
  }
  return statements;
}

RicArticle extract_article(std::string_view html, const ExtractionConfig& config, std::string article_id) {
  const auto doc = html::Document::parse(html);
  const auto excluded = excluded_nodes(doc.root(), config.exclude);

  RicArticle article;
  article.article_id = std::move(article_id);
  article.statements = statements_in(doc, config, excluded);
  if (article.statements.empty()) {
    throw ExtractionError(article.article_id + ": no statement container matches '" + config.statement.source() + "'");
  }

  if (const Node* title = first_visible(doc.root(), config.title, excluded)) {
    article.title = html::visible_text(*title);
  }

  const Node* date_node = first_visible(doc.root(), config.date, excluded);
  if (!date_node) throw ExtractionError(article.article_id + ": no publication date node");
  std::string raw_date;
  if (auto v = date_node->attribute("datetime")) {
    raw_date = std::string(*v);
  } else if (auto c = date_node->attribute("content")) {
    raw_date = std::string(*c);
  } else {
    raw_date = html::visible_text(*date_node);
  }
  const auto date = parse_date(std::string_view(raw_date).substr(0, 10));
  if (!date) throw ExtractionError(article.article_id + ": unreadable publication date '" + raw_date + "'");
  article.published = *date;

  for (const Node* n : html::select_all(doc.root(), config.doi)) {
    if (excluded.count(n)) continue;
    for (const char* attr : {"href", "content"}) {
      if (auto v = n->attribute(attr)) article.doi = extract_doi(*v);
      if (article.doi) break;
    }
    if (!article.doi) article.doi = extract_doi(html::visible_text(*n));
    if (article.doi) break;
  }
  return article;
}

}  // namespace revalign
