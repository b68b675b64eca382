#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ramds/corpus.hpp"
#include "ramds/parse_tree.hpp"

namespace ramds {

enum class PhraseKind { NP, VP };

std::string_view to_string(PhraseKind kind);

struct Phrase {
  std::string id;
  std::string sentence_id;
  PhraseKind kind = PhraseKind::NP;
  std::string node_label;  // NP, VP, SBAR or S
  std::size_t begin = 0;   // leaf span [begin, end) within the sentence
  std::size_t end = 0;
  int word_count = 0;
  int level = 1;                  // 1: direct child of S, 2: parallel sub-phrase
  std::set<std::string> ancestors;  // ids of extracted phrases dominating this one
  std::vector<std::string> leaves;  // leaf tokens of the span (PTB escapes kept)

  /// Phrase surface with leading/trailing punctuation trimmed.
  std::string text() const;
  /// Sentence leaf range [first, second) left after that trimming.
  std::pair<std::size_t, std::size_t> trimmed_span() const;
};

/// Extracts NP and VP candidates from the first S node of the tree:
///   - NP and VP children of S (level 1);
///   - for a level-1 VP (NP) with at least two parallel VP (NP) children, those
///     children (level 2), skipping sub-VPs that follow a modal or a form of
///     be/have/do;
///   - an SBAR or S that fills the subject slot before the first VP, as an NP.
/// Throws Error{NoSentenceNode} when the tree contains no S.
std::vector<Phrase> extract_phrases(const ParseTree& tree, const Sentence& sentence);

/// Tokens of a leaf range run through the corpus tokenizer (punctuation dropped).
std::vector<Token> tokenize_leaves(const std::vector<std::string>& leaves);

}  // namespace ramds
