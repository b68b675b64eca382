#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ramds/salience.hpp"
#include "support.hpp"

using namespace ramds;

namespace {

Phrase make_phrase(const std::string& id, const std::string& sentence, std::vector<std::string> leaves,
                   std::set<std::string> ancestors = {}) {
  Phrase p;
  p.id = id;
  p.sentence_id = sentence;
  p.leaves = std::move(leaves);
  p.end = p.leaves.size();
  p.ancestors = std::move(ancestors);
  p.word_count = count_words(p.text());
  return p;
}

SaliencedPhrase with_unigrams(Phrase p) {
  SaliencedPhrase s;
  s.unigrams = phrase_unigrams(p);
  s.phrase = std::move(p);
  return s;
}

}  // namespace

TEST_CASE("salience is the phrase share of topic term mass times expressiveness") {
  TopicTermFrequency tf;
  tf.counts = {{"cat", 3}, {"sat", 1}};
  tf.total = 4;
  CHECK(phrase_salience({"cat"}, 0.5, tf) == doctest::Approx(0.375));
  CHECK(phrase_salience({"cat", "sat"}, 1.0, tf) == doctest::Approx(1.0));
  CHECK(phrase_salience({"cat", "sat"}, 0.0, tf) == 0.0);
  CHECK(phrase_salience({}, 0.9, tf) == 0.0);
  CHECK(phrase_salience({"dog"}, 0.9, tf) == 0.0);
}

TEST_CASE("jaccard over unigram sets") {
  CHECK(jaccard({"a", "b", "c"}, {"b", "c", "d"}) == doctest::Approx(0.5));
  CHECK(jaccard({"a", "b"}, {"a", "b"}) == 1.0);
  CHECK(jaccard({"a"}, {"b"}) == 0.0);
  CHECK(jaccard({}, {}) == 0.0);
}

TEST_CASE("phrase terms come from the dictionary and are counted once") {
  const Dictionary dict({"storm", "coast", "hit", "storm_hit", "hit_coast"});
  const auto p = make_phrase("p", "s", {"The", "storm", "hit", "the", "storm", "coast"});
  const auto terms = phrase_terms(p, dict);
  CHECK(terms == std::set<std::string>{"storm", "hit", "coast", "storm_hit"});
  CHECK(phrase_unigrams(p) == std::set<std::string>{"storm", "hit", "coast"});
}

TEST_CASE("topic frequency counts news and comment occurrences of dictionary terms") {
  testing::TempDir dir;
  testing::write_bundle(dir, testing::small_bundle());
  const auto topic = load_topic(dir.path());
  const auto tf = topic_term_frequency(topic);
  // "storm" once in news, once in a comment; "scari" is not a dictionary term.
  CHECK(tf.counts.at("storm") == 2.0);
  CHECK(tf.counts.count("scari") == 0);
  double sum = 0.0;
  for (const auto& [term, c] : tf.counts) {
    CHECK(topic.dictionary.find(term).has_value());
    sum += c;
  }
  CHECK(tf.total == sum);
}

TEST_CASE("salience stays within [0, a] and grows with added terms") {
  testing::TempDir dir;
  testing::write_bundle(dir, testing::small_bundle());
  const auto topic = load_topic(dir.path());
  const auto tf = topic_term_frequency(topic);
  std::mt19937_64 rng(1);
  std::vector<std::string> terms = topic.dictionary.terms();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<std::string> chosen;
    const double a = u(rng);
    double last = 0.0;
    std::shuffle(terms.begin(), terms.end(), rng);
    for (const auto& t : terms) {
      chosen.insert(t);
      const double s = phrase_salience(chosen, a, tf);
      CHECK(s >= last);
      CHECK(s <= a + 1e-12);
      last = s;
    }
    CHECK(last == doctest::Approx(a));
  }
}

TEST_CASE("similarity skips same-sentence and nested pairs") {
  std::vector<SaliencedPhrase> pool;
  pool.push_back(with_unigrams(make_phrase("s1/p0", "s1", {"the", "armed", "gunman"})));
  pool.push_back(with_unigrams(make_phrase("s2/p0", "s2", {"the", "armed", "gunman"})));
  pool.push_back(with_unigrams(make_phrase("s2/p1", "s2", {"armed", "gunman", "fled"})));
  pool.push_back(with_unigrams(make_phrase("s3/p0", "s3", {"gunman", "fled"})));
  pool.push_back(with_unigrams(make_phrase("s3/p1", "s3", {"fled"}, {"s3/p0"})));
  pool.push_back(with_unigrams(make_phrase("s4/p0", "s4", {"rain", "fell"})));

  const auto sim = build_similarity(pool);
  CHECK(sim.get(0, 1) == 1.0);
  CHECK(sim.get(1, 0) == 1.0);
  CHECK(sim.get(0, 2) == doctest::Approx(2.0 / 3.0));
  CHECK(sim.get(1, 2) == 0.0);  // same sentence
  CHECK(sim.get(3, 4) == 0.0);  // nested
  CHECK(sim.get(2, 3) == doctest::Approx(2.0 / 3.0));
  CHECK(sim.get(2, 4) == doctest::Approx(1.0 / 3.0));
  for (const auto& [ij, r] : sim.pairs()) {
    CHECK(ij.first < ij.second);
    CHECK(r > 0.0);
    CHECK(r <= 1.0);
    CHECK(ij.second != 5);
  }
}

TEST_CASE("disjoint pool has an empty similarity matrix") {
  std::vector<SaliencedPhrase> pool;
  const std::vector<std::string> words = {"storm", "flood", "bridge", "mayor"};
  for (std::size_t i = 0; i < words.size(); ++i)
    pool.push_back(with_unigrams(make_phrase("s" + std::to_string(i) + "/p0", "s" + std::to_string(i), {words[i]})));
  CHECK(build_similarity(pool).size() == 0);
}

TEST_CASE("make_salienced_phrase fills every field") {
  const Dictionary dict({"storm", "coast"});
  TopicTermFrequency tf;
  tf.counts = {{"storm", 2}, {"coast", 6}};
  tf.total = 8;
  const auto s = make_salienced_phrase(make_phrase("p", "s", {"the", "storm"}), 0.8, dict, tf);
  CHECK(s.expressiveness == 0.8);
  CHECK(s.salience == doctest::Approx(0.2));
  CHECK(s.unigrams == std::set<std::string>{"storm"});
}
