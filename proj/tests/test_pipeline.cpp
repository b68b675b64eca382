#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ramds/error.hpp"
#include "ramds/pipeline.hpp"
#include "ramds/text.hpp"
#include "support.hpp"

using namespace ramds;

namespace {

const std::filesystem::path kToy = RAMDS_DATA_DIR "/toy";

}  // namespace

TEST_CASE("toy topic end to end") {
  const auto result = summarize_bundle(kToy / "topic1", {});
  CHECK(result.length_budget == result.topic.length_budget_words);
  CHECK(result.solution.status == IlpStatus::Optimal);
  CHECK_FALSE(result.draft.sentences.empty());
  CHECK(count_words(result.draft.text()) == result.draft.total_words);
  CHECK(result.draft.total_words <= result.length_budget);
  CHECK(result.expressiveness.scores.size() == result.topic.news_sentences().size());
  for (const double a : result.expressiveness.scores) CHECK(a >= 0.0);
}

TEST_CASE("same bundle and config give identical output") {
  testing::TempDir a, b;
  PipelineConfig config;
  write_outputs(summarize_bundle(kToy / "topic2", config), a.path(), config);
  write_outputs(summarize_bundle(kToy / "topic2", config), b.path(), config);
  for (const char* f : {"summary.txt", "trace.json", "rouge.json"})
    CHECK(testing::read(a.path() / f) == testing::read(b.path() / f));
}

TEST_CASE("no-comments mode drops the comment targets") {
  PipelineConfig config;
  config.comments_enabled = false;
  const auto result = summarize_bundle(kToy / "topic1", config);
  CHECK(result.topic.comment_sentences.empty());
  CHECK(result.draft.total_words <= result.length_budget);

  // Disabling comments on an already loaded topic behaves the same.
  auto topic = load_topic(kToy / "topic1", {});
  REQUIRE_FALSE(topic.comment_sentences.empty());
  const auto again = run_pipeline(std::move(topic), config);
  CHECK(again.expressiveness.scores == result.expressiveness.scores);
  CHECK(again.draft.text() == result.draft.text());
}

TEST_CASE("budget override") {
  for (const int L : {0, 1, 7, 25}) {
    PipelineConfig config;
    config.length_budget = L;
    const auto result = summarize_bundle(kToy / "topic3", config);
    CAPTURE(L);
    CHECK(result.length_budget == L);
    CHECK(count_words(result.draft.text()) <= L);
  }
}

TEST_CASE("written outputs") {
  testing::TempDir dir;
  PipelineConfig config;
  OutputOptions options;
  options.lp_dump = dir.path() / "dbg" / "model.lp";
  options.loss_trace = dir.path() / "loss.txt";
  const auto result = summarize_bundle(kToy / "topic1", config);
  const auto rouge = write_outputs(result, dir.path() / "out", config, options);
  REQUIRE(rouge.has_value());

  CHECK(testing::read(dir.path() / "out" / "summary.txt") == result.draft.text());
  const auto trace = nlohmann::json::parse(testing::read(dir.path() / "out" / "trace.json"));
  CHECK(trace["topic"] == "topic1");
  CHECK(trace["length_budget"] == result.length_budget);
  CHECK(trace["expressiveness"]["scores"].size() == result.topic.news_sentences().size());
  const auto scores = nlohmann::json::parse(testing::read(dir.path() / "out" / "rouge.json"));
  CHECK(scores["ROUGE-2"]["f"].get<double>() == doctest::Approx(rouge->at(RougeMetric::R2).f_measure));

  const auto lp = testing::read(*options.lp_dump);
  CHECK(lp.find("\nmax: ") != std::string::npos);
  CHECK(lp.find("bin ") != std::string::npos);

  std::istringstream lines(testing::read(*options.loss_trace));
  std::vector<double> js;
  for (double j; lines >> j;) js.push_back(j);
  REQUIRE(js.size() == result.expressiveness.loss_trace.size());
  for (std::size_t t = 0; t < js.size(); ++t) CHECK(js[t] == result.expressiveness.loss_trace[t]);
}

TEST_CASE("no gold summaries means no rouge file") {
  testing::TempDir dir;
  PipelineConfig config;
  const auto result = summarize_bundle(kToy / "comment_focus", config);
  CHECK_FALSE(write_outputs(result, dir.path(), config).has_value());
  CHECK_FALSE(std::filesystem::exists(dir.path() / "rouge.json"));
  CHECK(std::filesystem::exists(dir.path() / "summary.txt"));
}

TEST_CASE("errors carry the topic id") {
  testing::TempDir dir;
  auto files = testing::small_bundle();
  files["topic.json"] = R"({"id": "t", "length_budget_words": 20, "documents": [{"id": "d1", "timestamp": 5}]})";
  testing::write_bundle(dir, files);
  PipelineConfig config;
  config.length_budget = -1;
  try {
    summarize_bundle(dir.path(), config);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
    CHECK(std::string(e.what()).find("topic 't': ") != std::string::npos);
  }
  CHECK(testing::error_of([] { summarize_bundle(RAMDS_TEST_DIR "/fixtures/missing_parses", {}); }) ==
        ErrorCode::MissingParse);
}

TEST_CASE("lead baseline takes sentences in chronological order") {
  // Later document listed first; two leading sentences of 5 + 4 words fill L = 9 exactly.
  const auto topic = testing::build_topic({
      {"late", 20, {"(S (NP (NNS Floods)) (VP (VBD followed)) (. .))"}},
      {"early", 10,
       {"(S (NP (DT The) (NN storm)) (VP (VBD hit) (NP (DT the) (NN coast))) (. .))",
        "(S (NP (NNS Roads)) (VP (VBD were) (ADJP (JJ closed)) (NP (NN today))) (. .))",
        "(S (NP (NNS Schools)) (VP (VBD shut)) (. .))"}},
  });
  const auto lead = lead_baseline(topic, 9);
  CHECK(lead.sentence_ids == std::vector<std::string>{"early.0", "early.1"});
  CHECK(lead.total_words == 9);
  CHECK(lead.lines.front() == "The storm hit the coast.");
  CHECK(lead_baseline(topic, 8).sentence_ids == std::vector<std::string>{"early.0"});
  CHECK(lead_baseline(topic, 100).sentence_ids.back() == "late.0");
  CHECK(lead_baseline(topic, 0).sentence_ids.empty());
}

TEST_CASE("random baseline is seeded and within budget") {
  const auto topic = load_topic(kToy / "topic4", {});
  const int L = topic.length_budget_words;
  CHECK(random_baseline(topic, L, 7).text() == random_baseline(topic, L, 7).text());
  std::set<std::string> distinct;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = random_baseline(topic, L, seed);
    CHECK(r.total_words <= L);
    CHECK(count_words(r.text()) == r.total_words);
    std::set<std::string> ids(r.sentence_ids.begin(), r.sentence_ids.end());
    CHECK(ids.size() == r.sentence_ids.size());
    distinct.insert(r.text());
  }
  CHECK(distinct.size() > 1);
}
