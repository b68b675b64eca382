#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ramds/assembler.hpp"
#include "ramds/corpus.hpp"
#include "ramds/expressiveness.hpp"
#include "ramds/mentions.hpp"
#include "ramds/optimizer.hpp"
#include "ramds/rouge.hpp"
#include "ramds/salience.hpp"

namespace ramds {

struct PipelineConfig {
  SparseCodingParams sparse_coding;
  OptConfig optimizer;                 // optimizer.length_budget is replaced by the topic's L unless overridden
  std::optional<int> length_budget;    // overrides the bundle's length_budget_words
  RougeConfig rouge;
  bool comments_enabled = true;
  std::uint64_t seed = 1;              // baselines only
};

struct PipelineResult {
  Topic topic;
  ExpressivenessResult expressiveness;
  std::vector<SaliencedPhrase> pool;
  SimilarityMatrix similarity;
  std::vector<MentionCluster> clusters;
  std::optional<IlpModel> model;  // absent when the pool is empty
  IlpSolution solution;
  SummaryDraft draft;
  int length_budget = 0;
};

/// Scores every news sentence, extracts and scores phrases, prepares mention
/// clusters, solves the selection program and assembles the summary.
PipelineResult run_pipeline(Topic topic, const PipelineConfig& config);

/// Loads the bundle (comments skipped when disabled) and runs the pipeline.
PipelineResult summarize_bundle(const std::filesystem::path& bundle, const PipelineConfig& config);

struct OutputOptions {
  std::optional<std::filesystem::path> lp_dump;     // LP-format model
  std::optional<std::filesystem::path> loss_trace;  // one J per line
};

/// Writes summary.txt, trace.json and, when the bundle has gold summaries,
/// rouge.json into `out_dir`. Returns the ROUGE scores if computed.
std::optional<RougeScores> write_outputs(const PipelineResult& result, const std::filesystem::path& out_dir,
                                         const PipelineConfig& config, const OutputOptions& options = {});

enum class BaselineKind { Random, Lead };

struct BaselineSummary {
  std::vector<std::string> sentence_ids;
  std::vector<std::string> lines;
  int total_words = 0;

  std::string text() const;
};

/// Whole-sentence baselines: stop at the first sentence that would exceed L.
BaselineSummary lead_baseline(const Topic& topic, int length_budget);
BaselineSummary random_baseline(const Topic& topic, int length_budget, std::uint64_t seed);

/// Gold summaries of a bundle (files under gold/), empty if there are none.
std::vector<std::string> gold_summaries(const Topic& topic);

/// Summary text of a news sentence as emitted by the baselines.
std::string sentence_text(const Sentence& sentence);

}  // namespace ramds
