// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "revalign/errors.hpp"
#include "revalign/scoring.hpp"

namespace revalign {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json record_to_json(const ScoredStatement& s) {
  ordered_json scores = ordered_json::object();
  for (auto c : kAllCriteria) {
    const auto v = s.scores[c];
    scores[std::string(criterion_key(c))] = v ? ordered_json(*v) : ordered_json(nullptr);
  }
  return {{"article_id", s.article_id}, {"statement_id", s.statement_id}, {"run", s.run},
          {"scorer_id", s.scorer_id},   {"failed", s.failed},             {"scores", std::move(scores)}};
}

std::string string_field(const json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) throw SchemaError(line, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

ScoredStatement record_from_json(const json& obj, std::size_t line) {
  if (!obj.is_object()) throw SchemaError(line, "record must be an object");
  ScoredStatement s;
  s.article_id = string_field(obj, "article_id", line);
  s.statement_id = string_field(obj, "statement_id", line);
  s.scorer_id = string_field(obj, "scorer_id", line);
  const auto run = obj.find("run");
  if (run == obj.end() || !run->is_number_integer() || run->get<long long>() < 0) {
    throw SchemaError(line, "field 'run' must be a non-negative integer");
  }
  s.run = run->get<int>();
  const auto failed = obj.find("failed");
  if (failed != obj.end()) {
    if (!failed->is_boolean()) throw SchemaError(line, "field 'failed' must be a boolean");
    s.failed = failed->get<bool>();
  }
  const auto scores = obj.find("scores");
  if (scores == obj.end() || !scores->is_object()) throw SchemaError(line, "field 'scores' must be an object");
  for (auto c : kAllCriteria) {
    const std::string key(criterion_key(c));
    const auto v = scores->find(key);
    if (v == scores->end()) throw SchemaError(line, "scores lack key " + key);
    if (v->is_null()) continue;
    if (!v->is_number()) throw SchemaError(line, "score " + key + " must be a number or null");
    try {
      s.scores.set(c, v->get<double>());
    } catch (const OutOfRange& e) {
      throw SchemaError(line, e.what());
    }
  }
  return s;
}

}  // namespace

std::string serialize_scores(std::span<const ScoredStatement> scores) {
  std::ostringstream out;
  for (const auto& s : scores) {
    out << record_to_json(s).dump(-1, ' ', false, ordered_json::error_handler_t::replace) << '\n';
  }
  return out.str();
}

ScoreSet parse_scores_text(std::string_view text) {
  ScoreSet out;
  std::set<std::tuple<std::string, std::string, int, std::string>> seen;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    if (trim(raw).empty()) continue;
    const json obj = json::parse(raw, nullptr, false);
    if (obj.is_discarded()) throw SchemaError(line_no, "invalid JSON");
    auto record = record_from_json(obj, line_no);
    if (!seen.emplace(record.article_id, record.statement_id, record.run, record.scorer_id).second) {
      throw SchemaError(line_no, "duplicate score record for " + record.article_id + "/" + record.statement_id +
                                     " run " + std::to_string(record.run));
    }
    out.push_back(std::move(record));
  }
  return out;
}

void write_scores(const std::filesystem::path& path, std::span<const ScoredStatement> scores) {
  write_file(path, serialize_scores(scores));
}

ScoreSet read_scores(const std::filesystem::path& path) { return parse_scores_text(read_file(path)); }

}  // namespace revalign
