#include "ramds/salience.hpp"

#include <algorithm>
#include <iterator>

namespace ramds {

TopicTermFrequency topic_term_frequency(const Topic& topic) {
  TopicTermFrequency tf;
  auto add = [&](const Sentence& s) {
    for (const auto& term : extract_terms(s.tokens)) {
      if (!topic.dictionary.find(term)) continue;
      tf.counts[term] += 1.0;
      tf.total += 1.0;
    }
  };
  for (const auto* s : topic.news_sentences()) add(*s);
  for (const auto& s : topic.comment_sentences) add(s);
  return tf;
}

void SimilarityMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i == j) return;
  if (i > j) std::swap(i, j);
  if (value > 0.0) {
    pairs_[{i, j}] = value;
  } else {
    pairs_.erase({i, j});
  }
}

double SimilarityMatrix::get(std::size_t i, std::size_t j) const {
  if (i == j) return 1.0;
  if (i > j) std::swap(i, j);
  const auto it = pairs_.find({i, j});
  return it == pairs_.end() ? 0.0 : it->second;
}

std::set<std::string> phrase_terms(const Phrase& phrase, const Dictionary& dict) {
  std::set<std::string> terms;
  for (auto& term : extract_terms(tokenize_leaves(phrase.leaves)))
    if (dict.find(term)) terms.insert(std::move(term));
  return terms;
}

double phrase_salience(const std::set<std::string>& terms, double expressiveness, const TopicTermFrequency& tf) {
  if (expressiveness == 0.0 || tf.total <= 0.0) return 0.0;
  double mass = 0.0;
  for (const auto& term : terms) {
    const auto it = tf.counts.find(term);
    if (it != tf.counts.end()) mass += it->second;
  }
  return mass / tf.total * expressiveness;
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  const double inter = static_cast<double>(common.size());
  return inter / (static_cast<double>(a.size() + b.size()) - inter);
}

std::set<std::string> phrase_unigrams(const Phrase& phrase) {
  std::set<std::string> out;
  for (const auto& token : tokenize_leaves(phrase.leaves))
    if (!token.is_stopword) out.insert(token.stem);
  return out;
}

SaliencedPhrase make_salienced_phrase(Phrase phrase, double expressiveness, const Dictionary& dict,
                                      const TopicTermFrequency& tf) {
  SaliencedPhrase out;
  out.salience = phrase_salience(phrase_terms(phrase, dict), expressiveness, tf);
  out.expressiveness = expressiveness;
  out.unigrams = phrase_unigrams(phrase);
  out.phrase = std::move(phrase);
  return out;
}

SimilarityMatrix build_similarity(const std::vector<SaliencedPhrase>& phrases) {
  SimilarityMatrix sim;
  for (std::size_t i = 0; i < phrases.size(); ++i) {
    for (std::size_t j = i + 1; j < phrases.size(); ++j) {
      const auto& a = phrases[i].phrase;
      const auto& b = phrases[j].phrase;
      if (a.sentence_id == b.sentence_id) continue;
      if (a.ancestors.count(b.id) || b.ancestors.count(a.id)) continue;
      sim.set(i, j, jaccard(phrases[i].unigrams, phrases[j].unigrams));
    }
  }
  return sim;
}

}  // namespace ramds
