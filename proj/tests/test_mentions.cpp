#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "ramds/error.hpp"
#include "ramds/mentions.hpp"
#include "support.hpp"

using namespace ramds;

namespace {

Mention mention(const std::string& surface, int position, bool pronoun = false, int doc = 0) {
  Mention m;
  m.surface = surface;
  m.sentence_id = "d" + std::to_string(doc) + "." + std::to_string(position);
  m.doc_id = "d" + std::to_string(doc);
  m.doc_rank = doc;
  m.sentence_position = position;
  m.begin = 0;
  m.end = static_cast<std::size_t>(std::max(1, count_words(surface)));
  m.is_pronoun = pronoun;
  return m;
}

DocumentCluster cluster(const std::string& doc, EntityType type, std::vector<Mention> mentions) {
  DocumentCluster c;
  c.doc_id = doc;
  c.entity_type = type;
  for (auto& m : mentions) m.entity_type = type;
  c.mentions = std::move(mentions);
  return c;
}

// Exhaustive scoring: content-word stems counted over every mention surface.
std::pair<std::size_t, std::size_t> oracle_forms(const std::vector<Mention>& ms) {
  std::map<std::string, int> tf;
  auto stems = [](const std::string& s) {
    std::vector<std::string> out;
    for (const auto& w : split_words(s))
      if (!is_stopword(w)) out.push_back(porter_stem(w));
    return out;
  };
  for (const auto& m : ms)
    for (const auto& s : stems(m.surface)) ++tf[s];
  auto score = [&](const Mention& m) {
    int sum = 0;
    for (const auto& s : stems(m.surface)) sum += tf[s];
    return sum;
  };
  std::size_t full = ms.size(), shortest = ms.size();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].is_pronoun) continue;
    if (full == ms.size() || score(ms[i]) > score(ms[full]) ||
        (score(ms[i]) == score(ms[full]) && ms[i].order_key() < ms[full].order_key()))
      full = i;
    const int w = count_words(ms[i].surface);
    if (shortest == ms.size() || w < count_words(ms[shortest].surface) ||
        (w == count_words(ms[shortest].surface) &&
         (score(ms[i]) > score(ms[shortest]) ||
          (score(ms[i]) == score(ms[shortest]) && ms[i].order_key() < ms[shortest].order_key()))))
      shortest = i;
  }
  return {full, shortest};
}

}  // namespace

TEST_CASE("full form by cluster term frequency, short form among the shortest") {
  std::vector<Mention> ms = {mention("President Barack Obama", 0)};
  for (int i = 1; i <= 5; ++i) ms.push_back(mention("Obama", i));
  for (int i = 6; i <= 8; ++i) ms.push_back(mention("he", i, true));
  // obama occurs in six surfaces: 1 + 1 + 6 = 8 beats 6.
  const auto forms = select_forms(ms);
  CHECK(forms.full_form.surface == "President Barack Obama");
  CHECK(forms.short_form.surface == "Obama");
  CHECK(forms.short_form.sentence_position == 1);  // earliest of the tied "Obama"s
}

TEST_CASE("single and identical mentions") {
  const auto one = select_forms({mention("Nepal", 3)});
  CHECK(one.full_form.surface == "Nepal");
  CHECK(one.short_form.surface == "Nepal");
  const auto same = select_forms({mention("Kathmandu", 4), mention("Kathmandu", 2)});
  CHECK(same.full_form.sentence_position == 2);
  CHECK(same.short_form.sentence_position == 2);
}

TEST_CASE("pronoun-only clusters have no forms") {
  CHECK(testing::error_of([] { select_forms({mention("it", 0, true)}); }) == ErrorCode::NoNonPronounMention);
}

TEST_CASE("verbose mentions lose to frequent ones") {
  const auto forms = select_forms({mention("the reclusive billionaire owner", 0), mention("Koirala", 1),
                                   mention("Sushil Koirala", 2), mention("Koirala", 3)});
  // koirala: 3, sushil: 1 -> "Sushil Koirala" scores 4 against 1+1+1.
  CHECK(forms.full_form.surface == "Sushil Koirala");
  CHECK(forms.short_form.surface == "Koirala");
}

TEST_CASE("form selection matches exhaustive scoring on random clusters") {
  const std::vector<std::string> names = {"Barack Obama", "Obama", "President Obama", "Michelle Obama",
                                          "the president", "Barack", "he", "him", "United Nations", "Nations"};
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Mention> ms;
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      const auto& s = names[rng() % names.size()];
      ms.push_back(mention(s, static_cast<int>(rng() % 20), is_pronoun(s), static_cast<int>(rng() % 3)));
    }
    if (std::all_of(ms.begin(), ms.end(), [](const Mention& m) { return m.is_pronoun; })) {
      CHECK(testing::error_of([&] { select_forms(ms); }) == ErrorCode::NoNonPronounMention);
      continue;
    }
    const auto forms = select_forms(ms);
    const auto [full, shortest] = oracle_forms(ms);
    CHECK(forms.full_form.surface == ms[full].surface);
    CHECK(forms.full_form.order_key() == ms[full].order_key());
    CHECK(forms.short_form.surface == ms[shortest].surface);
    CHECK(forms.short_form.word_count() <= forms.full_form.word_count());
    CHECK_FALSE(forms.full_form.is_pronoun);
    CHECK_FALSE(forms.short_form.is_pronoun);
  }
}

TEST_CASE("clusters sharing a surface merge across documents") {
  const auto merged = merge_clusters({
      cluster("a", EntityType::Person, {mention("Barack Obama", 0, false, 0), mention("Obama", 1, false, 0)}),
      cluster("b", EntityType::Person, {mention("obama", 0, false, 1)}),
  });
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].size() == 3);
}

TEST_CASE("type mismatch blocks a merge") {
  const auto merged = merge_clusters({
      cluster("a", EntityType::Location, {mention("Paris", 0, false, 0)}),
      cluster("b", EntityType::Person, {mention("Paris Hilton", 0, false, 1), mention("Paris", 1, false, 1)}),
  });
  CHECK(merged.size() == 2);
}

TEST_CASE("pronouns alone never link clusters") {
  const auto merged = merge_clusters({
      cluster("a", EntityType::Person, {mention("Tim Cook", 0, false, 0), mention("he", 1, true, 0)}),
      cluster("b", EntityType::Person, {mention("Jony Ive", 0, false, 1), mention("he", 1, true, 1)}),
  });
  CHECK(merged.size() == 2);
}

TEST_CASE("entity keys link clusters without a shared surface") {
  auto a = cluster("a", EntityType::Person, {mention("Najib", 0, false, 0)});
  auto b = cluster("b", EntityType::Person, {mention("Prime Minister Najib Razak", 0, false, 1)});
  a.entity_key = b.entity_key = "gazetteer:0";
  CHECK(merge_clusters({a, b}).size() == 1);
  b.entity_key = "gazetteer:1";
  CHECK(merge_clusters({a, b}).size() == 2);
}

TEST_CASE("merging is order independent and idempotent") {
  std::vector<DocumentCluster> input = {
      cluster("a", EntityType::Person, {mention("Barack Obama", 0, false, 0), mention("he", 2, true, 0)}),
      cluster("b", EntityType::Person, {mention("Obama", 1, false, 1)}),
      cluster("c", EntityType::Person, {mention("President Obama", 0, false, 2), mention("Obama", 3, false, 2)}),
      cluster("d", EntityType::Organization, {mention("United Nations", 0, false, 1)}),
      cluster("e", EntityType::Location, {mention("Nepal", 1, false, 2)}),
      cluster("f", EntityType::Location, {mention("Nepal", 4, false, 0)}),
  };
  auto canonical = [](std::vector<std::vector<Mention>> groups) {
    std::vector<std::vector<std::tuple<int, int, std::size_t, std::size_t>>> keys;
    for (auto& g : groups) {
      std::vector<std::tuple<int, int, std::size_t, std::size_t>> k;
      for (const auto& m : g) k.push_back(m.order_key());
      std::sort(k.begin(), k.end());
      keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  const auto expected = canonical(merge_clusters(input));
  CHECK(expected.size() == 4);  // "Barack Obama" shares no surface with the "Obama" clusters
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(input.begin(), input.end(), rng);
    const auto merged = merge_clusters(input);
    CHECK(canonical(merged) == expected);
    // Feeding the merged clusters back in changes nothing.
    std::vector<DocumentCluster> again;
    for (const auto& g : merged) {
      auto c = cluster(g.front().doc_id, g.front().entity_type, g);
      again.push_back(c);
    }
    CHECK(canonical(merge_clusters(again)) == expected);
  }
}

TEST_CASE("finalize resolves overlaps and drops pronoun-only clusters") {
  auto a = cluster("a", EntityType::Person, {mention("Barack Obama", 0, false, 0)});
  auto b = cluster("a", EntityType::Person, {mention("Barack", 0, false, 0)});
  b.mentions[0].end = 1;
  auto c = cluster("a", EntityType::Person, {mention("he", 3, true, 0)});
  const auto clusters = finalize_clusters({a, b, c});
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0].id == "e0");
  CHECK(clusters[0].mentions.size() == 1);
  CHECK(clusters[0].full_form.surface == "Barack Obama");
}

TEST_CASE("mentions.json is read and merged") {
  const auto topic = load_topic(RAMDS_DATA_DIR "/toy/topic5");
  const auto clusters = load_or_derive_clusters(topic);
  const MentionCluster* cook = nullptr;
  for (const auto& c : clusters)
    if (c.full_form.surface == "Tim Cook") cook = &c;
  REQUIRE(cook != nullptr);
  CHECK(cook->entity_type == EntityType::Person);
  CHECK(cook->mentions.size() == 2);  // "Tim Cook" and "He"
  CHECK(cook->short_form.surface == "Tim Cook");  // the pronoun is never a form
  // n2's lone "Cook" shares no surface with n1's cluster and stays apart.
  int people = 0, apple = 0;
  for (const auto& c : clusters) {
    people += c.entity_type == EntityType::Person;
    if (c.full_form.surface == "Apple") apple = static_cast<int>(c.mentions.size());
  }
  CHECK(people == 2);
  CHECK(apple == 4);  // one cluster per document, joined by the shared surface
  for (const auto& c : clusters) {
    CHECK_FALSE(c.full_form.is_pronoun);
    CHECK_FALSE(c.short_form.is_pronoun);
  }
}

TEST_CASE("gazetteer clusters when no mentions.json is shipped") {
  const auto topic = load_topic(RAMDS_DATA_DIR "/toy/topic1");
  const auto clusters = load_or_derive_clusters(topic);
  REQUIRE_FALSE(clusters.empty());
  bool koirala = false;
  for (const auto& c : clusters) {
    for (const auto& m : c.mentions) {
      const auto* s = topic.find_sentence(m.sentence_id);
      REQUIRE(s != nullptr);
      const auto leaves = s->parse->leaves();
      REQUIRE(m.end <= leaves.size());
      CHECK(detokenize(std::vector<std::string>(leaves.begin() + static_cast<std::ptrdiff_t>(m.begin),
                                                leaves.begin() + static_cast<std::ptrdiff_t>(m.end))) == m.surface);
    }
    if (c.full_form.surface.find("Koirala") != std::string::npos) {
      koirala = true;
      CHECK(c.short_form.surface == "Koirala");
    }
  }
  CHECK(koirala);
}

TEST_CASE("mentions.json errors") {
  const auto topic = load_topic(RAMDS_DATA_DIR "/toy/topic5");
  auto code = [&](const std::string& text) { return testing::error_of([&] { parse_mentions_json(topic, text); }); };
  CHECK(code("{not json") == ErrorCode::MalformedMentions);
  CHECK(code("{}") == ErrorCode::MalformedMentions);
  CHECK(code(R"([{"doc_id": "n1", "entity_type": "PERSON", "mentions": []}])") == ErrorCode::MalformedMentions);
  CHECK(code(R"([{"doc_id": "zz", "entity_type": "PERSON", "mentions": [{"sentence_id": "n1.1", "start": 0, "end": 1, "surface": "Apple"}]}])") ==
        ErrorCode::MalformedMentions);
  CHECK(code(R"([{"doc_id": "n1", "entity_type": "PERSON", "mentions": [{"sentence_id": "n2.1", "start": 0, "end": 1, "surface": "Apple"}]}])") ==
        ErrorCode::MalformedMentions);
  CHECK(code(R"([{"doc_id": "n1", "entity_type": "PERSON", "mentions": [{"sentence_id": "n1.1", "start": 0, "end": 99, "surface": "Apple"}]}])") ==
        ErrorCode::SpanOutOfRange);
  CHECK(code(R"([{"doc_id": "n1", "entity_type": "PERSON", "mentions": [{"sentence_id": "n1.1", "start": 2, "end": 2, "surface": "Apple"}]}])") ==
        ErrorCode::SpanOutOfRange);
  // Other entity types are read and ignored.
  CHECK(parse_mentions_json(topic, R"([{"doc_id": "n1", "entity_type": "DATE", "mentions": [{"sentence_id": "n1.1", "start": 0, "end": 1, "surface": "Apple"}]}])")
            .empty());
}
