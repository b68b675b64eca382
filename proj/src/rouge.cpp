#include "ramds/rouge.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "ramds/error.hpp"
#include "ramds/text.hpp"

namespace ramds {
namespace {

using Counts = std::unordered_map<std::string, int>;

Counts ngrams(const std::vector<std::string>& tokens, std::size_t n) {
  Counts out;
  if (tokens.size() < n) return out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = 1; k < n; ++k) key += ' ' + tokens[i + k];
    ++out[key];
  }
  return out;
}

Counts skip_units(const std::vector<std::string>& tokens, int distance) {
  Counts out = ngrams(tokens, 1);
  for (std::size_t i = 0; i < tokens.size(); ++i)
    for (std::size_t j = i + 1; j < tokens.size() && j - i <= static_cast<std::size_t>(distance); ++j)
      ++out[tokens[i] + '\t' + tokens[j]];
  return out;
}

int total(const Counts& c) {
  int sum = 0;
  for (const auto& [k, v] : c) sum += v;
  return sum;
}

RougeScore compare(const Counts& sys, const Counts& ref, bool same_tokens) {
  RougeScore s;
  const int sys_total = total(sys);
  const int ref_total = total(ref);
  if (sys_total == 0 && ref_total == 0) {
    // Nothing to count on either side (e.g. bigrams of one-word texts).
    const double v = same_tokens ? 1.0 : 0.0;
    return {v, v, v};
  }
  int overlap = 0;
  for (const auto& [key, n] : sys) {
    const auto it = ref.find(key);
    if (it != ref.end()) overlap += std::min(n, it->second);
  }
  s.recall = ref_total > 0 ? static_cast<double>(overlap) / ref_total : 0.0;
  s.precision = sys_total > 0 ? static_cast<double>(overlap) / sys_total : 0.0;
  s.f_measure = s.recall + s.precision > 0.0 ? 2.0 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
  return s;
}

}  // namespace

std::string_view to_string(RougeMetric metric) {
  switch (metric) {
    case RougeMetric::R1: return "ROUGE-1";
    case RougeMetric::R2: return "ROUGE-2";
    case RougeMetric::SU4: return "ROUGE-SU4";
  }
  return "?";
}

std::vector<std::string> rouge_tokens(std::string_view text, const RougeConfig& config) {
  std::vector<std::string> out;
  for (const auto& word : split_words(text)) {
    std::string w = to_lower(word);
    if (config.remove_stopwords && is_stopword(w)) continue;
    out.push_back(config.stem ? porter_stem(w) : w);
  }
  return out;
}

RougeScores score_single(const std::vector<std::string>& system, const std::vector<std::string>& reference,
                         const RougeConfig& config) {
  const bool same = system == reference;
  return {{RougeMetric::R1, compare(ngrams(system, 1), ngrams(reference, 1), same)},
          {RougeMetric::R2, compare(ngrams(system, 2), ngrams(reference, 2), same)},
          {RougeMetric::SU4,
           compare(skip_units(system, config.skip_distance), skip_units(reference, config.skip_distance), same)}};
}

RougeScores score(std::string_view system, const std::vector<std::string>& references, const RougeConfig& config) {
  if (references.empty()) throw Error(ErrorCode::EmptyReference, "no reference summaries");
  const auto sys = rouge_tokens(system, config);
  RougeScores mean;
  for (std::size_t r = 0; r < references.size(); ++r) {
    const auto ref = rouge_tokens(references[r], config);
    if (ref.empty()) throw Error(ErrorCode::EmptyReference, "reference " + std::to_string(r) + " has no tokens");
    for (const auto& [metric, s] : score_single(sys, ref, config)) {
      auto& m = mean[metric];
      m.recall += s.recall;
      m.precision += s.precision;
      m.f_measure += s.f_measure;
    }
  }
  const double n = static_cast<double>(references.size());
  for (auto& [metric, s] : mean) {
    s.recall /= n;
    s.precision /= n;
    s.f_measure /= n;
  }
  return mean;
}

std::vector<std::string> read_references(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw Error(ErrorCode::EmptyReference, "reference directory " + dir.string() + " does not exist");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<std::string> out;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    out.push_back(text.str());
  }
  return out;
}

nlohmann::json to_json(const RougeScores& scores) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [metric, s] : scores)
    out[std::string(to_string(metric))] = {{"recall", s.recall}, {"precision", s.precision}, {"f", s.f_measure}};
  return out;
}

}  // namespace ramds
