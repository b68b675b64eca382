#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ramds {

enum class RougeMetric { R1, R2, SU4 };

std::string_view to_string(RougeMetric metric);

struct RougeScore {
  double recall = 0.0;
  double precision = 0.0;
  double f_measure = 0.0;
};

struct RougeConfig {
  bool stem = true;
  bool remove_stopwords = false;
  int skip_distance = 4;  // SU: pairs (t_i, t_j) with 0 < j - i <= skip_distance
};

using RougeScores = std::map<RougeMetric, RougeScore>;

/// Lowercased alphanumeric tokens, optionally stemmed and stopword-filtered.
std::vector<std::string> rouge_tokens(std::string_view text, const RougeConfig& config);

/// Clipped-overlap P/R/F against one reference.
RougeScores score_single(const std::vector<std::string>& system, const std::vector<std::string>& reference,
                         const RougeConfig& config);

/// Mean of the per-reference scores. Throws Error{EmptyReference}.
RougeScores score(std::string_view system, const std::vector<std::string>& references, const RougeConfig& config = {});

/// Every regular file in the directory, sorted by file name.
std::vector<std::string> read_references(const std::filesystem::path& dir);

nlohmann::json to_json(const RougeScores& scores);

}  // namespace ramds
