#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ramds/corpus.hpp"
#include "ramds/treebank.hpp"

namespace ramds {

// Frequency of every dictionary term over the whole topic (news and comments).
struct TopicTermFrequency {
  std::unordered_map<std::string, double> counts;
  double total = 0.0;
};

TopicTermFrequency topic_term_frequency(const Topic& topic);

struct SaliencedPhrase {
  Phrase phrase;
  double salience = 0.0;        // S_i
  double expressiveness = 0.0;  // a_i of the containing sentence
  std::set<std::string> unigrams;  // stemmed non-stopword unigrams, for similarity
};

// Pairwise similarity of candidate phrases; only i < j with R_ij > 0 is stored.
class SimilarityMatrix {
 public:
  void set(std::size_t i, std::size_t j, double value);
  double get(std::size_t i, std::size_t j) const;
  const std::map<std::pair<std::size_t, std::size_t>, double>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

 private:
  std::map<std::pair<std::size_t, std::size_t>, double> pairs_;
};

/// Distinct dictionary terms (unigrams and bigrams) occurring in the phrase.
std::set<std::string> phrase_terms(const Phrase& phrase, const Dictionary& dict);

/// S = (sum of topic frequencies of the phrase's distinct terms / total topic
/// term frequency) * a.
double phrase_salience(const std::set<std::string>& terms, double expressiveness, const TopicTermFrequency& tf);

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

std::set<std::string> phrase_unigrams(const Phrase& phrase);

SaliencedPhrase make_salienced_phrase(Phrase phrase, double expressiveness, const Dictionary& dict,
                                      const TopicTermFrequency& tf);

/// Jaccard similarity for pairs from different sentences with no ancestor relation.
SimilarityMatrix build_similarity(const std::vector<SaliencedPhrase>& phrases);

}  // namespace ramds
