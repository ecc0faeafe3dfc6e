// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The revalign Authors

// revalign: review statement scoring, agreement and impact report pipeline.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "revalign/corpus.hpp"
#include "revalign/errors.hpp"
#include "revalign/extraction.hpp"
#include "revalign/pipeline.hpp"
#include "revalign/pipeline_config.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitStage = 3;

struct Overrides {
  std::string config;
  std::string corpus;
  std::optional<int> runs;
  std::string scorer;
  std::string out;
  std::string format;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "Pipeline config file");
  cmd->add_option("--corpus", o.corpus, "Corpus file (overrides the config)");
  cmd->add_option("--runs", o.runs, "Independent scoring runs")->check(CLI::PositiveNumber);
  cmd->add_option("--scorer", o.scorer, "Scorer backend")->check(CLI::IsMember({"mock", "remote"}));
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--format", o.format, "Report format (default: both)")->check(CLI::IsMember({"csv", "md"}));
}

revalign::PipelineConfig resolve(const Overrides& o) {
  revalign::PipelineConfig config;
  if (!o.config.empty()) config = revalign::PipelineConfig::load(o.config);
  if (!o.corpus.empty()) config.corpus = o.corpus;
  if (o.runs) config.runs = *o.runs;
  if (o.scorer == "mock") config.scorer_kind = revalign::ScorerKind::Mock;
  if (o.scorer == "remote") config.scorer_kind = revalign::ScorerKind::Remote;
  if (!o.out.empty()) config.out_dir = o.out;
  if (!o.format.empty()) config.formats = {o.format};
  if (config.corpus.empty()) throw revalign::ConfigError("no corpus given (use --corpus or paths.corpus)");
  return config;
}

void print_outputs(const revalign::RunSummary& summary) {
  for (const auto& path : summary.outputs) std::cout << path.string() << '\n';
}

int run_extract(const std::string& html_dir, const std::string& selectors, const std::string& corpus_out,
                bool keep_partial, const Overrides& o) {
  fs::path selector_file = selectors;
  std::size_t min_chars = revalign::CorpusOptions{}.min_statement_chars;
  fs::path out = corpus_out;
  if (!o.config.empty()) {
    const auto config = revalign::PipelineConfig::load(o.config);
    if (selector_file.empty()) selector_file = config.extraction_selectors;
    if (out.empty()) out = config.corpus;
    min_chars = config.min_statement_chars;
  }
  if (!o.corpus.empty() && out.empty()) out = o.corpus;
  if (selector_file.empty()) throw revalign::ConfigError("no selector file given (use --selectors)");
  if (out.empty()) throw revalign::ConfigError("no output corpus given (use --corpus)");

  const auto selector_config = revalign::ExtractionConfig::load(selector_file);
  const auto summary =
      revalign::cmd_extract(html_dir, selector_config, out, keep_partial, revalign::CorpusOptions{min_chars});
  for (const auto& page : summary.pages) {
    if (page.error.empty()) {
      std::cout << page.page.filename().string() << ": " << page.statements << " statements\n";
    } else {
      std::cerr << page.page.filename().string() << ": " << page.error << '\n';
    }
  }
  if (summary.corpus_written) std::cout << "wrote " << out.string() << '\n';
  if (summary.failures() > 0) {
    std::cerr << summary.failures() << " page(s) failed"
              << (summary.corpus_written ? "; partial corpus kept\n" : "; no corpus written\n");
    return kExitStage;
  }
  return 0;
}

int run_validate(const Overrides& o) {
  const auto config = resolve(o);
  const auto corpus = revalign::parse_corpus(config.corpus, revalign::CorpusOptions{config.min_statement_chars});
  std::size_t with_doi = 0;
  for (const auto& a : corpus.articles) with_doi += a.doi.has_value();
  std::cout << corpus.source_label << ": " << corpus.articles.size() << " articles, " << corpus.statement_count()
            << " statements, " << with_doi << " with DOI\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Score review statements, measure agreement and build impact reports"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "revalign 0.1.0");

  Overrides o;
  std::string html_dir, selectors, corpus_out;
  bool keep_partial = false;

  auto* extract = app.add_subcommand("extract", "Extract a corpus from saved review pages");
  extract->add_option("html_dir", html_dir, "Directory of .html pages")->required();
  extract->add_option("--selectors", selectors, "Selector config file");
  extract->add_option("--corpus", corpus_out, "Corpus file to write");
  extract->add_option("--config", o.config, "Pipeline config file");
  extract->add_flag("--keep-partial", keep_partial, "Write the corpus even when some pages fail");

  auto* validate = app.add_subcommand("validate", "Check a corpus file");
  auto* score = app.add_subcommand("score", "Score every statement");
  auto* agree = app.add_subcommand("agree", "Compute per-article agreement from a scores file");
  auto* report = app.add_subcommand("report", "Enrich articles and write the report tables");
  auto* run_all = app.add_subcommand("run-all", "Run every stage and write a manifest");
  for (auto* cmd : {validate, score, agree, report, run_all}) add_common(cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  revalign::PipelineHooks hooks;
  hooks.log = &std::cerr;
  try {
    if (*extract) return run_extract(html_dir, selectors, corpus_out, keep_partial, o);
    if (*validate) return run_validate(o);
    if (*score) print_outputs(revalign::cmd_score(resolve(o), hooks));
    if (*agree) print_outputs(revalign::cmd_agree(resolve(o)));
    if (*report) print_outputs(revalign::cmd_report(resolve(o), hooks));
    if (*run_all) print_outputs(revalign::cmd_run_all(resolve(o), hooks));
    return 0;
  } catch (const revalign::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitStage;
  }
}
