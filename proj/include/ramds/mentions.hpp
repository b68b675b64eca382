#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "ramds/corpus.hpp"

namespace ramds {

struct Mention {
  std::string surface;
  std::string sentence_id;
  std::string doc_id;
  std::size_t begin = 0;  // leaf span [begin, end) in the sentence's parse
  std::size_t end = 0;
  bool is_pronoun = false;
  EntityType entity_type = EntityType::Person;
  // Document-order key: document rank in the topic, sentence position, begin.
  int doc_rank = 0;
  int sentence_position = 0;

  auto order_key() const { return std::make_tuple(doc_rank, sentence_position, begin, end); }
  int word_count() const;
};

struct MentionCluster {
  std::string id;
  EntityType entity_type = EntityType::Person;
  std::vector<Mention> mentions;  // document order
  Mention full_form;
  Mention short_form;
};

// A per-document cluster as produced by a co-reference system.
struct DocumentCluster {
  std::string doc_id;
  EntityType entity_type = EntityType::Person;
  std::vector<Mention> mentions;
  std::string entity_key;  // gazetteer entry; clusters with the same key are merged
};

struct MentionForms {
  Mention full_form;
  Mention short_form;
};

/// Full form: the non-pronoun mention maximizing the summed in-cluster stem
/// frequency of its words. Short form: among the shortest non-pronoun
/// mentions, the one with the highest such sum. Ties go to the earliest mention.
/// Throws Error{NoNonPronounMention}.
MentionForms select_forms(const std::vector<Mention>& mentions);

/// Unions clusters of the same entity type that share a non-pronoun surface
/// (case-insensitive) or a nonempty entity key. The result does not depend on
/// input order.
std::vector<std::vector<Mention>> merge_clusters(const std::vector<DocumentCluster>& clusters);

/// Reads mentions.json when present, otherwise derives per-document clusters
/// from the topic's entity gazetteer; merges across documents, drops
/// overlapping mentions and clusters without a non-pronoun mention.
/// Throws Error{MalformedMentions, SpanOutOfRange}.
std::vector<MentionCluster> load_or_derive_clusters(const Topic& topic);

/// Parses the mentions.json schema against a loaded topic.
std::vector<DocumentCluster> parse_mentions_json(const Topic& topic, const std::string& text);

/// Exact-match gazetteer clusters, one per (document, entity entry).
std::vector<DocumentCluster> derive_clusters(const Topic& topic);

/// Merges, resolves overlaps, selects forms and assigns ids.
std::vector<MentionCluster> finalize_clusters(const std::vector<DocumentCluster>& clusters);

}  // namespace ramds
