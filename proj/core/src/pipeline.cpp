// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

#include "revalign/pipeline.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "json.hpp"
#include "revalign/agreement.hpp"
#include "revalign/analysis.hpp"
#include "revalign/enrichment.hpp"
#include "revalign/hash.hpp"
#include "revalign/prompt.hpp"
#include "revalign/remote_scorer.hpp"
#include "revalign/report.hpp"
#include "revalign/scoring.hpp"

namespace revalign {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

StageError::StageError(std::string stage, std::string kind, const std::string& message)
    : Error("[" + stage + "] " + kind + ": " + message), stage_(std::move(stage)), kind_(std::move(kind)) {}

std::string error_kind(const std::exception& e) {
  if (auto* s = dynamic_cast<const StageError*>(&e)) return s->kind();
  if (dynamic_cast<const AuthError*>(&e)) return "AuthError";
  if (dynamic_cast<const RateLimitExceeded*>(&e)) return "RateLimitExceeded";
  if (dynamic_cast<const TransportError*>(&e)) return "TransportError";
  if (dynamic_cast<const SchemaError*>(&e)) return "SchemaError";
  if (dynamic_cast<const IoError*>(&e)) return "IoError";
  if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
  if (dynamic_cast<const ExtractionError*>(&e)) return "ExtractionError";
  if (dynamic_cast<const MixedArticle*>(&e)) return "MixedArticle";
  if (dynamic_cast<const NonFiniteValue*>(&e)) return "NonFiniteValue";
  if (dynamic_cast<const InsufficientRuns*>(&e)) return "InsufficientRuns";
  if (dynamic_cast<const EmptyInput*>(&e)) return "EmptyInput";
  if (dynamic_cast<const OutOfRange*>(&e)) return "OutOfRange";
  return "Error";
}

std::size_t ExtractSummary::failures() const {
  return static_cast<std::size_t>(
      std::count_if(pages.begin(), pages.end(), [](const PageResult& p) { return !p.error.empty(); }));
}

ExtractSummary cmd_extract(const fs::path& html_dir, const ExtractionConfig& selectors, const fs::path& corpus_out,
                           bool keep_partial, const CorpusOptions& options) {
  if (!fs::is_directory(html_dir)) throw IoError("not a directory: " + html_dir.string());
  std::vector<fs::path> pages;
  for (const auto& entry : fs::directory_iterator(html_dir)) {
    const auto ext = to_lower(entry.path().extension().string());
    if (entry.is_regular_file() && (ext == ".html" || ext == ".htm")) pages.push_back(entry.path());
  }
  if (pages.empty()) throw ExtractionError("no input pages in " + html_dir.string());
  std::sort(pages.begin(), pages.end());

  ExtractSummary summary;
  Corpus corpus;
  corpus.source_label = html_dir.filename().string();
  if (corpus.source_label.empty()) corpus.source_label = html_dir.parent_path().filename().string();
  corpus.extracted_at = now_seconds();
  for (const auto& page : pages) {
    PageResult result{page, 0, {}};
    try {
      auto article = extract_article(read_file(page), selectors, page.stem().string());
      validate_article(article, options);
      if (corpus.find(article.article_id)) throw SchemaError("duplicate article_id " + article.article_id);
      result.statements = article.statements.size();
      corpus.articles.push_back(std::move(article));
    } catch (const Error& e) {
      result.error = e.what();
    }
    summary.pages.push_back(std::move(result));
  }
  if (summary.failures() == 0 || keep_partial) {
    write_corpus(corpus_out, corpus);
    summary.corpus_written = true;
  }
  return summary;
}

namespace {

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, error_kind(e), e.what());
  }
}

void log_line(const PipelineHooks& hooks, const std::string& line) {
  if (hooks.log) *hooks.log << line << '\n';
}

std::unique_ptr<Scorer> make_scorer(const PipelineConfig& config) {
  if (config.scorer_kind == ScorerKind::Mock) return std::make_unique<MockScorer>(config.seed);
  RemoteScorerConfig rc;
  rc.endpoint = config.scorer_endpoint;
  rc.model = config.model;
  rc.api_key = scoring_api_key_from_env().value_or("");
  rc.temperature = config.temperature;
  rc.backoff = Backoff{std::chrono::milliseconds{config.backoff_ms}, 2.0};
  return std::make_unique<RemoteScorer>(std::move(rc));
}

struct ProviderSet {
  std::unique_ptr<CitationProvider> citations;
  std::unique_ptr<AltmetricProvider> altmetrics;
  std::shared_ptr<HttpProvider> http;
  Providers view;
};

ProviderSet make_providers(const PipelineConfig& config, const PipelineHooks& hooks) {
  ProviderSet set;
  if (config.provider_kind == ProviderKind::Fixture) {
    if (!config.citations_fixture.empty()) {
      set.citations = std::make_unique<FixtureCitationProvider>(FixtureCitationProvider::load(config.citations_fixture));
    }
    if (!config.altmetrics_fixture.empty()) {
      set.altmetrics =
          std::make_unique<FixtureAltmetricProvider>(FixtureAltmetricProvider::load(config.altmetrics_fixture));
    }
    set.view = {set.citations.get(), set.altmetrics.get()};
  } else if (config.provider_kind == ProviderKind::Http) {
    HttpProviderConfig hc;
    hc.endpoint = config.provider_endpoint;
    hc.token = enrich_api_token_from_env().value_or("");
    hc.requests_per_second = config.provider_rate;
    set.http = std::make_shared<HttpProvider>(std::move(hc));
    set.view = {set.http.get(), set.http.get()};
  }
  if (hooks.citations) set.view.citations = hooks.citations;
  if (hooks.altmetrics) set.view.altmetrics = hooks.altmetrics;
  return set;
}

class OutputWriter {
 public:
  OutputWriter(const fs::path& dir, RunSummary& summary) : dir_(dir), summary_(summary) {}

  void write(const std::string& name, const std::string& contents) {
    const auto path = dir_ / name;
    write_file(path, contents);
    summary_.outputs.push_back(path);
    digests_.emplace_back(name, sha256_hex(contents));
  }

  const std::vector<std::pair<std::string, std::string>>& digests() const { return digests_; }

 private:
  fs::path dir_;
  RunSummary& summary_;
  std::vector<std::pair<std::string, std::string>> digests_;
};

struct Context {
  const PipelineConfig& config;
  const PipelineHooks& hooks;
  Corpus corpus;
  ScoreSet scores;
  RunSummary summary;
};

Corpus load_corpus(const PipelineConfig& config) {
  return parse_corpus(config.corpus, CorpusOptions{config.min_statement_chars});
}

void score_stage(Context& ctx, Scorer& scorer) {
  const auto& config = ctx.config;
  ScoreCache cache(config.cache_path() / "scores.jsonl");
  BatchOptions options;
  options.runs = config.runs;
  options.concurrency = config.concurrency;
  options.policy = ScoringPolicy{config.retries, Backoff{std::chrono::milliseconds{config.backoff_ms}, 2.0}};
  ctx.scores = score_corpus(ctx.corpus, scorer, default_prompt_template(), &cache, options);
  write_scores(config.scores_path(), ctx.scores);
  ctx.summary.outputs.push_back(config.scores_path());
  ctx.summary.score_records = ctx.scores.size();
  ctx.summary.failed_records = static_cast<std::size_t>(
      std::count_if(ctx.scores.begin(), ctx.scores.end(), [](const auto& s) { return s.failed; }));
  ctx.summary.scorer_id = scorer_id_for(scorer, default_prompt_template());
  log_line(ctx.hooks, "score: " + std::to_string(ctx.summary.score_records) + " records, " +
                          std::to_string(ctx.summary.failed_records) + " failed");
}

std::vector<std::string> article_order(const Corpus& corpus) {
  std::vector<std::string> order;
  for (const auto& a : corpus.articles) order.push_back(a.article_id);
  return order;
}

std::map<std::string, AlphaResult> agree_stage(Context& ctx, OutputWriter& out) {
  auto alphas = alpha_per_article(ctx.scores, 0, ctx.config.metric);
  out.write("alpha_per_article.csv", report::alpha_csv(article_order(ctx.corpus), alphas));
  const auto runs = split_runs(ctx.scores);
  if (runs.size() >= 2) {
    out.write("run_agreement.csv", report::run_agreement_csv(runs.size(), alpha_across_runs(runs, ctx.config.metric)));
  }
  log_line(ctx.hooks, "agree: " + std::to_string(alphas.size()) + " articles");
  return alphas;
}

void report_stage(Context& ctx, const std::map<std::string, AlphaResult>& alphas, OutputWriter& out) {
  const auto& config = ctx.config;
  auto providers = make_providers(config, ctx.hooks);
  EnrichmentCache cache(config.cache_path() / "enrichment.jsonl", std::chrono::hours{24 * config.cache_ttl_days});
  const auto run0 = filter_run(ctx.scores, 0);
  const auto mean_ks = mean_k_per_article(run0, 0);
  const auto enriched =
      enrich(ctx.corpus, mean_ks, alphas, providers.view, &cache, EnrichOptions{config.provider_concurrency});
  for (const auto& e : enriched) {
    for (const auto& err : e.errors) log_line(ctx.hooks, "enrich: " + e.article.article_id + ": " + err);
  }

  const auto histogram = alpha_histogram(alphas);
  const auto averages = run0.empty() ? std::array<CriterionSummary, kCriterionCount>{} : criterion_averages(run0);
  const auto table2 = bibliometric_table(enriched);
  const auto table3 = altmetric_table(enriched);

  const bool csv = config.formats.count("csv") != 0;
  const bool md = config.formats.count("md") != 0;
  if (csv) out.write("table1_left.csv", report::table1_left_csv(histogram));
  if (md) out.write("table1_left.md", report::table1_left_md(histogram, mean_alpha(alphas)));
  if (csv) out.write("table1_right.csv", report::table1_right_csv(averages));
  if (md) out.write("table1_right.md", report::table1_right_md(averages));
  if (csv) out.write("table2.csv", report::table2_csv(table2));
  if (md) out.write("table2.md", report::table2_md(table2));
  if (csv) out.write("table3.csv", report::table3_csv(table3));
  if (md) out.write("table3.md", report::table3_md(table3));
  log_line(ctx.hooks, "report: " + std::to_string(enriched.size()) + " articles, " +
                          std::to_string(table2.totals.papers_matched) + " with citations");
}

Context make_context(const PipelineConfig& config, const PipelineHooks& hooks) {
  return Context{config, hooks, {}, {}, {}};
}

}  // namespace

RunSummary cmd_score(const PipelineConfig& config, const PipelineHooks& hooks) {
  config.validate();
  auto owned = hooks.scorer ? nullptr : stage("score", [&] { return make_scorer(config); });
  Scorer& scorer = hooks.scorer ? *hooks.scorer : *owned;
  auto ctx = make_context(config, hooks);
  ctx.corpus = stage("ingest", [&] { return load_corpus(config); });
  ctx.summary.articles = ctx.corpus.articles.size();
  ctx.summary.statements = ctx.corpus.statement_count();
  stage("score", [&] { score_stage(ctx, scorer); });
  return ctx.summary;
}

RunSummary cmd_agree(const PipelineConfig& config) {
  config.validate();
  const PipelineHooks hooks;
  auto ctx = make_context(config, hooks);
  ctx.corpus = stage("ingest", [&] { return load_corpus(config); });
  ctx.scores = stage("agree", [&] { return read_scores(config.scores_path()); });
  OutputWriter out(config.out_dir, ctx.summary);
  stage("agree", [&] { agree_stage(ctx, out); });
  return ctx.summary;
}

RunSummary cmd_report(const PipelineConfig& config, const PipelineHooks& hooks) {
  config.validate();
  auto ctx = make_context(config, hooks);
  ctx.corpus = stage("ingest", [&] { return load_corpus(config); });
  ctx.scores = stage("report", [&] { return read_scores(config.scores_path()); });
  OutputWriter out(config.out_dir, ctx.summary);
  const auto alphas = stage("agree", [&] { return alpha_per_article(ctx.scores, 0, config.metric); });
  stage("report", [&] { report_stage(ctx, alphas, out); });
  return ctx.summary;
}

RunSummary cmd_run_all(const PipelineConfig& config, const PipelineHooks& hooks) {
  const auto started = now_seconds();
  config.validate();
  // Credentials are checked before anything is read or written.
  auto owned = hooks.scorer ? nullptr : stage("score", [&] { return make_scorer(config); });
  Scorer& scorer = hooks.scorer ? *hooks.scorer : *owned;
  stage("enrich", [&] { return make_providers(config, hooks); });

  auto ctx = make_context(config, hooks);
  ctx.corpus = stage("ingest", [&] { return load_corpus(config); });
  ctx.summary.articles = ctx.corpus.articles.size();
  ctx.summary.statements = ctx.corpus.statement_count();
  stage("score", [&] { score_stage(ctx, scorer); });

  OutputWriter out(config.out_dir, ctx.summary);
  const auto alphas = stage("agree", [&] { return agree_stage(ctx, out); });
  stage("report", [&] { report_stage(ctx, alphas, out); });

  stage("report", [&] {
    ordered_json outputs = ordered_json::object();
    outputs[config.scores_path().filename().string()] = sha256_hex(read_file(config.scores_path()));
    for (const auto& [name, digest] : out.digests()) outputs[name] = digest;
    ordered_json manifest = {{"config_hash", config.hash()},
                             {"scorer_id", ctx.summary.scorer_id},
                             {"prompt_version", default_prompt_template().version()},
                             {"runs", config.runs},
                             {"metric", std::string(metric_name(config.metric))},
                             {"articles", ctx.summary.articles},
                             {"statements", ctx.summary.statements},
                             {"score_records", ctx.summary.score_records},
                             {"failed_records", ctx.summary.failed_records},
                             {"outputs", std::move(outputs)},
                             {"started_at", format_timestamp(started)},
                             {"finished_at", format_timestamp(now_seconds())}};
    const auto path = config.out_dir / "manifest.json";
    write_file(path, manifest.dump(2) + "\n");
    ctx.summary.outputs.push_back(path);
  });
  return ctx.summary;
}

}  // namespace revalign
