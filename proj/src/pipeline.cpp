#include "ramds/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "ramds/error.hpp"
#include "ramds/treebank.hpp"

namespace ramds {
namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << content;
}

BaselineSummary take_until_full(const std::vector<const Sentence*>& order, int length_budget) {
  BaselineSummary out;
  for (const auto* s : order) {
    const int words = sentence_word_count(*s);
    if (out.total_words + words > length_budget) break;
    out.sentence_ids.push_back(s->id);
    out.lines.push_back(sentence_text(*s));
    out.total_words += words;
  }
  return out;
}

}  // namespace

PipelineResult run_pipeline(Topic topic, const PipelineConfig& config) {
  // n = 0 mode: comments leave the salience counts too, not just the reconstruction targets
  if (!config.comments_enabled) topic.comment_sentences.clear();
  PipelineResult result;
  result.length_budget = config.length_budget.value_or(topic.length_budget_words);
  try {
    const bool use_comments = !topic.comment_sentences.empty();
    const auto sc_model = build_sparse_coding_model(topic, config.sparse_coding, use_comments);
    result.expressiveness = solve(sc_model);

    const auto tf = topic_term_frequency(topic);
    const auto news = topic.news_sentences();
    std::vector<SaliencedPhrase> candidates;
    for (std::size_t i = 0; i < news.size(); ++i) {
      const double a = result.expressiveness.scores.at(i);
      for (auto& phrase : extract_phrases(*news[i]->parse, *news[i]))
        candidates.push_back(make_salienced_phrase(std::move(phrase), a, topic.dictionary, tf));
    }
    result.pool = prune_pool(std::move(candidates));
    result.similarity = build_similarity(result.pool);
    result.clusters = load_or_derive_clusters(topic);

    if (result.pool.empty()) {
      result.solution.status = IlpStatus::Optimal;
    } else {
      OptConfig opt = config.optimizer;
      opt.length_budget = result.length_budget;
      result.model = build_model(result.pool, result.similarity, result.clusters, topic, opt);
      result.solution = solve_model(*result.model, opt);
      result.draft = assemble(result.solution, *result.model, result.pool, result.clusters, topic);
    }
  } catch (const Error& e) {
    const std::string what = e.what();
    const auto colon = what.find(": ");
    throw Error(e.code(), "topic '" + topic.id + "': " + (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
  result.topic = std::move(topic);
  return result;
}

PipelineResult summarize_bundle(const std::filesystem::path& bundle, const PipelineConfig& config) {
  CorpusConfig corpus;
  corpus.load_comments = config.comments_enabled;
  return run_pipeline(load_topic(bundle, corpus), config);
}

std::optional<RougeScores> write_outputs(const PipelineResult& result, const std::filesystem::path& out_dir,
                                         const PipelineConfig& config, const OutputOptions& options) {
  std::filesystem::create_directories(out_dir);
  write_file(out_dir / "summary.txt", result.draft.text());

  auto trace = trace_json(result.draft, result.solution);
  trace["topic"] = result.topic.id;
  trace["length_budget"] = result.length_budget;
  trace["comments_enabled"] = config.comments_enabled;
  nlohmann::json scores = nlohmann::json::object();
  const auto news = result.topic.news_sentences();
  for (std::size_t i = 0; i < news.size(); ++i) scores[news[i]->id] = result.expressiveness.scores.at(i);
  trace["expressiveness"] = {{"scores", scores},
                             {"iterations", result.expressiveness.iterations_run},
                             {"converged", result.expressiveness.converged}};
  trace["candidates"] = result.pool.size();
  trace["clusters"] = nlohmann::json::array();
  for (const auto& c : result.clusters)
    trace["clusters"].push_back({{"id", c.id},
                                 {"type", to_string(c.entity_type)},
                                 {"full_form", c.full_form.surface},
                                 {"short_form", c.short_form.surface},
                                 {"mentions", c.mentions.size()}});
  write_file(out_dir / "trace.json", trace.dump(2) + "\n");

  if (options.lp_dump && result.model) {
    std::ostringstream lp;
    write_lp_format(result.model->program, lp);
    write_file(*options.lp_dump, lp.str());
  }
  if (options.loss_trace) {
    std::ostringstream lines;
    lines.precision(17);
    for (const double j : result.expressiveness.loss_trace) lines << j << '\n';
    write_file(*options.loss_trace, lines.str());
  }

  const auto gold = gold_summaries(result.topic);
  if (gold.empty()) return std::nullopt;
  auto rouge = score(result.draft.text(), gold, config.rouge);
  write_file(out_dir / "rouge.json", to_json(rouge).dump(2) + "\n");
  return rouge;
}

std::string BaselineSummary::text() const {
  std::string out;
  for (const auto& line : lines) out += line + '\n';
  return out;
}

std::string sentence_text(const Sentence& sentence) {
  if (sentence.parse) return detokenize(sentence.parse->leaves());
  return sentence.raw_text;
}

BaselineSummary lead_baseline(const Topic& topic, int length_budget) {
  std::vector<const Document*> docs;
  for (const auto& d : topic.documents) docs.push_back(&d);
  std::stable_sort(docs.begin(), docs.end(),
                   [](const Document* a, const Document* b) { return a->timestamp < b->timestamp; });
  std::vector<const Sentence*> order;
  for (const auto* d : docs)
    for (const auto& paragraph : d->paragraphs)
      for (const auto& s : paragraph) order.push_back(&s);
  return take_until_full(order, length_budget);
}

BaselineSummary random_baseline(const Topic& topic, int length_budget, std::uint64_t seed) {
  auto order = topic.news_sentences();
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return take_until_full(order, length_budget);
}

std::vector<std::string> gold_summaries(const Topic& topic) {
  const auto dir = topic.bundle_path / "gold";
  if (topic.bundle_path.empty() || !std::filesystem::is_directory(dir)) return {};
  return read_references(dir);
}

}  // namespace ramds
