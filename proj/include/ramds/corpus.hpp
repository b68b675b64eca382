#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ramds/parse_tree.hpp"
#include "ramds/text.hpp"

namespace ramds {

enum class Origin { News, Comment };

struct Sentence {
  std::string id;
  Origin origin = Origin::News;
  std::optional<std::string> doc_id;
  int paragraph_index = 0;   // news only
  int position_in_doc = 0;   // comments: position in comments.txt
  std::string raw_text;
  std::vector<Token> tokens;
  std::optional<ParseTree> parse;  // required for news

  bool is_news() const { return origin == Origin::News; }
};

struct Document {
  std::string id;
  std::int64_t timestamp = 0;
  std::vector<std::vector<Sentence>> paragraphs;
};

enum class EntityType { Person, Location, Organization };

std::string_view to_string(EntityType type);
std::optional<EntityType> parse_entity_type(std::string_view name);

// Optional gazetteer entry from topic.json, used to derive mention clusters
// when no mentions.json is shipped with the bundle.
struct EntityEntry {
  EntityType type = EntityType::Person;
  std::vector<std::string> surfaces;
};

class Dictionary {
 public:
  Dictionary() = default;
  /// Terms are sorted and deduplicated.
  explicit Dictionary(std::vector<std::string> terms);

  const std::vector<std::string>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::optional<int> find(const std::string& term) const;

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, int> index_;
};

// Sparse non-negative count vector over dictionary columns.
class TermVector {
 public:
  TermVector() = default;
  /// Entries must have distinct columns; zero values are dropped.
  explicit TermVector(std::vector<std::pair<int, double>> entries);

  const std::vector<std::pair<int, double>>& entries() const { return entries_; }
  double norm2() const { return norm2_; }
  bool is_zero() const { return entries_.empty(); }
  double at(int column) const;

 private:
  std::vector<std::pair<int, double>> entries_;  // sorted by column
  double norm2_ = 0.0;
};

double dot(const TermVector& a, const TermVector& b);
/// Cosine similarity; 0 when either vector is zero.
double cosine(const TermVector& a, const TermVector& b);

struct Topic {
  std::string id;
  std::vector<Document> documents;
  std::vector<Sentence> comment_sentences;
  Dictionary dictionary;
  int length_budget_words = 100;
  std::vector<EntityEntry> entities;
  std::filesystem::path bundle_path;

  /// News sentences in document order.
  std::vector<const Sentence*> news_sentences() const;
  const Sentence* find_sentence(const std::string& id) const;
  const Document* find_document(const std::string& id) const;
};

struct CorpusConfig {
  bool load_comments = true;
};

/// Reads a topic bundle directory (topic.json, docs/, parses/, comments.txt)
/// and builds the dictionary. Throws Error{MalformedBundle, MissingParse,
/// DuplicateId, EmptyDictionary}.
Topic load_topic(const std::filesystem::path& path, const CorpusConfig& config = {});

/// Unigram and bigram terms of a token sequence, in order, with repetition.
/// Stopwords are removed before bigrams are formed.
std::vector<std::string> extract_terms(const std::vector<Token>& tokens);

/// Lexicographically ordered dictionary over news terms only.
Dictionary build_dictionary(const Topic& topic);

/// Counts of dictionary terms in the sentence; unknown terms are dropped.
TermVector vectorize(const Sentence& sentence, const Dictionary& dict);
TermVector vectorize(const std::vector<Token>& tokens, const Dictionary& dict);

}  // namespace ramds
