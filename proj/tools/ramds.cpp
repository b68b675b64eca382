// ramds: reader-aware compressive multi-document summarizer.
#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "ramds/error.hpp"
#include "ramds/pipeline.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kSolverGap = 2;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ramds::Error(ramds::ErrorCode::InvalidArgument, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ramds::Error(ramds::ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

void add_rouge_flags(CLI::App* app, ramds::RougeConfig& rouge) {
  app->add_flag("!--no-stem", rouge.stem, "Compare unstemmed tokens in ROUGE");
  app->add_flag("--rouge-stopwords", rouge.remove_stopwords, "Remove stopwords before ROUGE counting");
}

struct SummarizeArgs {
  std::vector<std::string> bundles;
  std::string out;
  std::string dump_lp;
  std::string loss_trace;
  int jobs = 1;
  int length = -1;
};

int run_summarize(const SummarizeArgs& args, const ramds::PipelineConfig& config) {
  std::atomic<std::size_t> next{0};
  int status = 0;
  std::mutex io;
  const bool many = args.bundles.size() > 1;

  auto work = [&] {
    for (std::size_t i = next++; i < args.bundles.size(); i = next++) {
      const std::filesystem::path bundle = args.bundles[i];
      std::filesystem::path out = args.out;
      if (many) out /= bundle.filename();
      int code = 0;
      try {
        const auto result = ramds::summarize_bundle(bundle, config);
        ramds::OutputOptions options;
        auto place = [&](const std::string& path) {
          return many ? out / std::filesystem::path(path).filename() : std::filesystem::path(path);
        };
        if (!args.dump_lp.empty()) options.lp_dump = place(args.dump_lp);
        if (!args.loss_trace.empty()) options.loss_trace = place(args.loss_trace);
        const auto rouge = ramds::write_outputs(result, out, config, options);
        std::lock_guard lock(io);
        std::cout << result.topic.id << ": " << result.draft.total_words << " words, "
                  << ramds::to_string(result.solution.status) << ", objective " << result.solution.objective;
        if (rouge) std::cout << ", ROUGE-2 F " << rouge->at(ramds::RougeMetric::R2).f_measure;
        std::cout << '\n';
        if (result.solution.status == ramds::IlpStatus::FeasibleWithGap && !config.optimizer.greedy) code = kSolverGap;
      } catch (const std::exception& e) {
        std::lock_guard lock(io);
        std::cerr << "error: " << bundle.string() << ": " << e.what() << '\n';
        code = kInputError;
      }
      // Input errors outrank a solver gap.
      std::lock_guard lock(io);
      if (code == kInputError || (code == kSolverGap && status == 0)) status = code;
    }
  };

  const int workers = std::max(1, std::min<int>(args.jobs, static_cast<int>(args.bundles.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return status;
}

int run_baseline(const std::string& kind, const std::string& bundle, const std::string& out, std::uint64_t seed,
                 int length, const ramds::RougeConfig& rouge) {
  const auto topic = ramds::load_topic(bundle, {false});
  const int budget = length >= 0 ? length : topic.length_budget_words;
  const auto summary = kind == "lead" ? ramds::lead_baseline(topic, budget) : ramds::random_baseline(topic, budget, seed);
  const std::filesystem::path dir = out;
  write_text(dir / "summary.txt", summary.text());
  std::cout << topic.id << ": " << kind << " baseline, " << summary.total_words << " words";
  const auto gold = ramds::gold_summaries(topic);
  if (!gold.empty()) {
    const auto scores = ramds::score(summary.text(), gold, rouge);
    write_text(dir / "rouge.json", ramds::to_json(scores).dump(2) + "\n");
    std::cout << ", ROUGE-2 F " << scores.at(ramds::RougeMetric::R2).f_measure;
  }
  std::cout << '\n';
  return 0;
}

int run_dump_trace(const std::string& path) {
  const auto trace = nlohmann::json::parse(slurp(path));
  std::cout << "topic " << trace.value("topic", std::string("?")) << "  status " << trace.at("status").get<std::string>()
            << "  objective " << trace.at("objective").get<double>() << "  words " << trace.at("total_words").get<int>();
  if (trace.contains("length_budget")) std::cout << "/" << trace["length_budget"].get<int>();
  std::cout << "  nodes " << trace.at("nodes_explored").get<int>() << '\n';
  for (const auto& s : trace.at("sentences")) {
    std::cout << "[" << s.at("doc_id").get<std::string>() << " @" << s.at("timestamp").get<long long>() << "] "
              << s.at("sentence_id").get<std::string>() << " (" << s.at("words").get<int>() << " words)\n  "
              << s.at("text").get<std::string>() << "\n  phrases:";
    for (const auto& p : s.at("phrases")) std::cout << ' ' << p.get<std::string>();
    std::cout << '\n';
    for (const auto& r : s.at("rewrites"))
      std::cout << "  " << r.at("cluster").get<std::string>() << ' ' << r.at("form").get<std::string>() << ": \""
                << r.at("original").get<std::string>() << "\" -> \"" << r.at("replacement").get<std::string>()
                << "\"\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reader-aware compressive multi-document summarizer"};
  app.require_subcommand(1);

  ramds::PipelineConfig config;
  SummarizeArgs sargs;
  auto* summarize = app.add_subcommand("summarize", "Summarize one or more topic bundles");
  summarize->add_option("--bundle", sargs.bundles, "Topic bundle directory (repeatable)")->required()->check(CLI::ExistingDirectory);
  summarize->add_option("--out", sargs.out, "Output directory")->required();
  summarize->add_option("--lambda", config.sparse_coding.lambda, "L1 penalty")->capture_default_str();
  summarize->add_option("--C", config.sparse_coding.position_base, "Paragraph position base")->capture_default_str();
  summarize->add_option("--p-bar", config.sparse_coding.paragraph_cap, "Paragraph position cap")->capture_default_str();
  summarize->add_option("--T", config.sparse_coding.max_iterations, "Coordinate descent iterations")->capture_default_str();
  summarize->add_option("--epsilon", config.sparse_coding.epsilon, "Loss change stopping threshold")->capture_default_str();
  summarize->add_option("--eta", config.sparse_coding.eta, "Step multiplier")->capture_default_str();
  summarize->add_option("--length", sargs.length, "Word budget L (default: from topic.json)");
  summarize->add_option("--short-threshold", config.optimizer.short_sentence_threshold,
                        "Sentences with fewer words contribute no VP")->capture_default_str();
  summarize->add_option("--time-limit", config.optimizer.ilp.time_limit_seconds, "Solver time limit in seconds")
      ->capture_default_str();
  summarize->add_flag("!--no-comments", config.comments_enabled, "Ignore reader comments");
  summarize->add_flag("--greedy", config.optimizer.greedy, "Greedy selection instead of branch-and-bound");
  summarize->add_option("--jobs", sargs.jobs, "Topics processed in parallel")->capture_default_str()->check(CLI::PositiveNumber);
  summarize->add_option("--dump-lp", sargs.dump_lp, "Write the selection program in LP format");
  summarize->add_option("--loss-trace", sargs.loss_trace, "Write the coordinate descent loss trace");
  add_rouge_flags(summarize, config.rouge);

  std::string kind = "lead", bundle, bout;
  std::uint64_t seed = 1;
  int blength = -1;
  ramds::RougeConfig brouge;
  auto* baseline = app.add_subcommand("baseline", "Random or lead whole-sentence baseline");
  baseline->add_option("--kind", kind, "random or lead")->check(CLI::IsMember({"random", "lead"}))->capture_default_str();
  baseline->add_option("--bundle", bundle, "Topic bundle directory")->required()->check(CLI::ExistingDirectory);
  baseline->add_option("--out", bout, "Output directory")->required();
  baseline->add_option("--seed", seed, "Random baseline seed")->capture_default_str();
  baseline->add_option("--length", blength, "Word budget L (default: from topic.json)");
  add_rouge_flags(baseline, brouge);

  std::string sys, refs, rout;
  ramds::RougeConfig rconfig;
  auto* rouge = app.add_subcommand("rouge", "Score a summary against reference summaries");
  rouge->add_option("--sys", sys, "System summary file")->required()->check(CLI::ExistingFile);
  rouge->add_option("--refs", refs, "Directory of reference summaries")->required()->check(CLI::ExistingDirectory);
  rouge->add_option("--out", rout, "Write the JSON here instead of stdout");
  add_rouge_flags(rouge, rconfig);

  std::string trace_path;
  auto* dump = app.add_subcommand("dump-trace", "Print a summary trace.json in readable form");
  dump->add_option("--trace", trace_path, "trace.json written by summarize")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  try {
    if (*summarize) {
      if (sargs.length >= 0) config.length_budget = sargs.length;
      return run_summarize(sargs, config);
    }
    if (*baseline) return run_baseline(kind, bundle, bout, seed, blength, brouge);
    if (*rouge) {
      const auto scores = ramds::score(slurp(sys), ramds::read_references(refs), rconfig);
      const auto text = ramds::to_json(scores).dump(2) + "\n";
      if (rout.empty()) {
        std::cout << text;
      } else {
        write_text(rout, text);
      }
      return 0;
    }
    if (*dump) return run_dump_trace(trace_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
