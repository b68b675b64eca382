#include "ramds/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ramds {
namespace {

// English stopwords (NLTK-derived, plus clitic fragments left by punctuation
// splitting such as "s" and "t"). Versioned by kStopwordListVersion.
constexpr std::array kStopwords = {
    "a",        "about",    "above",     "after",      "again",   "against", "ain",
    "all",      "am",       "an",        "and",        "any",     "are",     "aren",
    "as",       "at",       "be",        "because",    "been",    "before",  "being",
    "below",    "between",  "both",      "but",        "by",      "can",     "couldn",
    "d",        "did",      "didn",      "do",         "does",    "doesn",   "doing",
    "don",      "down",     "during",    "each",       "few",     "for",     "from",
    "further",  "had",      "hadn",      "has",        "hasn",    "have",    "haven",
    "having",   "he",       "her",       "here",       "hers",    "herself", "him",
    "himself",  "his",      "how",       "i",          "if",      "in",      "into",
    "is",       "isn",      "it",        "its",        "itself",  "just",    "ll",
    "m",        "ma",       "me",        "mightn",     "more",    "most",    "mustn",
    "my",       "myself",   "needn",     "no",         "nor",     "not",     "now",
    "o",        "of",       "off",       "on",         "once",    "only",    "or",
    "other",    "our",      "ours",      "ourselves",  "out",     "over",    "own",
    "re",       "s",        "same",      "shan",       "she",     "should",  "shouldn",
    "so",       "some",     "such",      "t",          "than",    "that",    "the",
    "their",    "theirs",   "them",      "themselves", "then",    "there",   "these",
    "they",     "this",     "those",     "through",    "to",      "too",     "under",
    "until",    "up",       "ve",        "very",       "was",     "wasn",    "we",
    "were",     "weren",    "what",      "when",       "where",   "which",   "while",
    "who",      "whom",     "why",       "will",       "with",    "won",     "wouldn",
    "y",        "you",      "your",      "yours",      "yourself", "yourselves",
    "would",    "could",    "also",      "said",       "says",    "say",
};

// Personal, possessive, reflexive and demonstrative pronouns.
constexpr std::array kPronouns = {
    "i",       "me",     "my",         "mine",   "myself",   "you",    "your",
    "yours",   "yourself", "yourselves", "he",   "him",      "his",    "himself",
    "she",     "her",    "hers",       "herself", "it",      "its",    "itself",
    "we",      "us",     "our",        "ours",   "ourselves", "they",  "them",
    "their",   "theirs", "themselves", "this",   "that",     "these",  "those",
};

const std::unordered_set<std::string_view>& stopword_set() {
  static const std::unordered_set<std::string_view> set(kStopwords.begin(), kStopwords.end());
  return set;
}

const std::unordered_set<std::string_view>& pronoun_set() {
  static const std::unordered_set<std::string_view> set(kPronouns.begin(), kPronouns.end());
  return set;
}

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

bool is_closing(std::string_view t) {
  static const std::unordered_set<std::string_view> closing = {
      ",", ".", ";", ":", "!", "?", "%", ")", "]", "}", "''", "'", "...", "--"};
  return closing.count(t) > 0;
}

bool is_opening(std::string_view t) {
  static const std::unordered_set<std::string_view> opening = {"(", "[", "{", "``", "$", "#"};
  return opening.count(t) > 0;
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (const char ch : text) {
    if (is_word_char(static_cast<unsigned char>(ch))) {
      current.push_back(ch);
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  for (auto& word : split_words(text)) {
    Token token;
    const std::string lower = to_lower(word);
    token.is_stopword = is_stopword(lower);
    token.stem = porter_stem(lower);
    token.surface = std::move(word);
    tokens.push_back(std::move(token));
  }
  return tokens;
}

bool is_stopword(std::string_view lowercase_word) {
  return stopword_set().count(lowercase_word) > 0;
}

bool is_pronoun(std::string_view word) { return pronoun_set().count(to_lower(word)) > 0; }

bool is_word_token(std::string_view token) {
  return std::any_of(token.begin(), token.end(),
                     [](char c) { return is_word_char(static_cast<unsigned char>(c)); });
}

int count_words(std::string_view text) {
  int count = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start && is_word_token(text.substr(start, i - start))) ++count;
  }
  return count;
}

std::string unescape_ptb(std::string_view leaf) {
  if (leaf == "-LRB-") return "(";
  if (leaf == "-RRB-") return ")";
  if (leaf == "-LSB-") return "[";
  if (leaf == "-RSB-") return "]";
  if (leaf == "-LCB-") return "{";
  if (leaf == "-RCB-") return "}";
  if (leaf == "``") return "``";
  return std::string(leaf);
}

std::string detokenize(const std::vector<std::string>& tokens) {
  std::vector<std::size_t> offsets;
  return detokenize(tokens, offsets);
}

std::string detokenize(const std::vector<std::string>& tokens, std::vector<std::size_t>& offsets) {
  std::string out;
  offsets.assign(tokens.size(), std::string::npos);
  bool glue_next = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string token = unescape_ptb(tokens[i]);
    if (token.empty()) continue;
    const bool word = is_word_token(token);
    const bool attach_left = !word && is_closing(token);
    if (!out.empty() && !glue_next && !attach_left) out.push_back(' ');
    offsets[i] = out.size();
    if (token == "``" || token == "''") {
      out.push_back('"');
    } else {
      out += token;
    }
    glue_next = !word && is_opening(token);
  }
  return out;
}

}  // namespace ramds
