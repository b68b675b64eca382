#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ramds/error.hpp"
#include "ramds/parse_tree.hpp"
#include "ramds/text.hpp"

using namespace ramds;

TEST_CASE("porter stemmer agrees with the reference vocabulary") {
  std::ifstream in(RAMDS_TEST_DIR "/fixtures/porter_vocab.tsv");
  REQUIRE(in.good());
  std::string line;
  int checked = 0, wrong = 0;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    const std::string word = line.substr(0, tab), expected = line.substr(tab + 1);
    const std::string got = porter_stem(word);
    if (got != expected) {
      ++wrong;
      if (wrong < 10) MESSAGE(word << ": got " << got << ", expected " << expected);
    }
    ++checked;
  }
  CHECK(checked > 1000);
  CHECK(wrong == 0);
}

TEST_CASE("porter stemmer classic steps") {
  CHECK(porter_stem("caresses") == "caress");
  CHECK(porter_stem("ponies") == "poni");
  CHECK(porter_stem("hopping") == "hop");
  CHECK(porter_stem("relational") == "relat");
  CHECK(porter_stem("generalizations") == "gener");
  CHECK(porter_stem("Running") == "run");
  CHECK(porter_stem("is") == "is");           // short words untouched
  CHECK(porter_stem("1,000") == "1,000");     // non-letters untouched
}

TEST_CASE("tokenize splits punctuation, lowercases and flags stopwords") {
  const auto tokens = tokenize("The gunman's truck, parked (outside) the school!");
  std::vector<std::string> surfaces, stems;
  for (const auto& t : tokens) {
    surfaces.push_back(t.surface);
    stems.push_back(t.stem);
  }
  CHECK(surfaces == std::vector<std::string>{"The", "gunman", "s", "truck", "parked", "outside", "the", "school"});
  CHECK(stems == std::vector<std::string>{"the", "gunman", "s", "truck", "park", "outsid", "the", "school"});
  CHECK(tokens[0].is_stopword);
  CHECK(tokens[2].is_stopword);
  CHECK_FALSE(tokens[3].is_stopword);
}

TEST_CASE("utf-8 letters stay inside words") {
  const auto words = split_words("Café au lait, São Paulo");
  CHECK(words == std::vector<std::string>{"Café", "au", "lait", "São", "Paulo"});
}

TEST_CASE("stopword and pronoun lists") {
  CHECK(kStopwordListVersion == "ramds-en-1");
  CHECK(is_stopword("the"));
  CHECK_FALSE(is_stopword("earthquake"));
  CHECK(is_pronoun("He"));
  CHECK(is_pronoun("themselves"));
  CHECK_FALSE(is_pronoun("Obama"));
}

TEST_CASE("word counting ignores punctuation-only tokens") {
  CHECK(count_words("An armed man walked into an Amish school .") == 8);
  CHECK(count_words("  -- , ; ") == 0);
  CHECK(count_words("killed 1,000 people") == 3);
  CHECK(count_words("") == 0);
}

TEST_CASE("detokenize attaches punctuation and keeps word count") {
  const std::vector<std::string> leaves = {"``", "Hello", "''", ",", "he", "said", "-LRB-", "twice", "-RRB-", "."};
  const auto text = detokenize(leaves);
  CHECK(text == "\"Hello\", he said (twice).");
  int words = 0;
  for (const auto& l : leaves) words += is_word_token(unescape_ptb(l)) ? 1 : 0;
  CHECK(count_words(text) == words);

  std::vector<std::size_t> offsets;
  const auto again = detokenize({"the", "Barack Obama", "said"}, offsets);
  CHECK(again == "the Barack Obama said");
  CHECK(offsets == std::vector<std::size_t>{0, 4, 17});
}

TEST_CASE("ptb reader builds spans, tags and function tags") {
  const auto tree = parse_ptb("(ROOT (S (NP-SBJ (DT The) (NN man)) (VP (VBD left) (-NONE- *T*)) (. .)))");
  CHECK(tree.label == "ROOT");
  CHECK(tree.leaves() == std::vector<std::string>{"The", "man", "left", "."});
  CHECK(tree.tags() == std::vector<std::string>{"DT", "NN", "VBD", "."});
  const auto& s = tree.children.at(0);
  CHECK(s.label == "S");
  CHECK(s.children.at(0).label == "NP");
  CHECK(s.children.at(0).function_tag == "SBJ");
  CHECK(s.children.at(1).begin == 2);
  CHECK(s.children.at(1).end == 3);
  CHECK(s.children.at(1).children.size() == 1);  // the empty element is gone
  CHECK(to_ptb(parse_ptb(to_ptb(tree))) == to_ptb(tree));
}

TEST_CASE("ptb reader errors") {
  auto code_of = [](const std::string& text) {
    try {
      parse_ptb(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of("(S (NP (DT the) (NN man))") == ErrorCode::UnbalancedBrackets);
  CHECK(code_of("(S (NP (DT the)))) extra") == ErrorCode::UnbalancedBrackets);
  CHECK(code_of("   ") == ErrorCode::EmptyTree);
  CHECK(code_of("()") == ErrorCode::EmptyTree);
}
