#include "ramds/treebank.hpp"

#include <string>
#include <unordered_set>

#include "ramds/error.hpp"

namespace ramds {
namespace {

bool is_punctuation_leaf(const std::string& leaf) { return !is_word_token(unescape_ptb(leaf)); }

const ParseTree* find_sentence_node(const ParseTree& node) {
  if (!node.is_leaf() && node.label == "S") return &node;
  for (const auto& child : node.children)
    if (const auto* found = find_sentence_node(child)) return found;
  return nullptr;
}

bool is_auxiliary_form(const std::string& word) {
  static const std::unordered_set<std::string> forms = {
      "be",   "am",  "is",     "are",  "was",  "were", "been", "being", "'s",   "'re",  "'m",
      "have", "has", "had",    "having", "'ve", "'d",  "do",   "does",  "did",  "doing", "done"};
  return forms.count(to_lower(word)) > 0;
}

bool is_adverbial(const ParseTree& node) {
  return node.label == "RB" || node.label == "ADVP";
}

// True when the nearest non-adverbial sibling before `index` is a modal or a
// form of be/have/do.
bool follows_auxiliary(const ParseTree& parent, std::size_t index) {
  for (std::size_t i = index; i-- > 0;) {
    const auto& sibling = parent.children[i];
    if (is_adverbial(sibling)) continue;
    if (!sibling.is_leaf()) return false;
    if (sibling.label == "MD") return true;
    return sibling.label.rfind("VB", 0) == 0 && is_auxiliary_form(*sibling.leaf_token);
  }
  return false;
}

std::vector<std::size_t> parallel_children(const ParseTree& node) {
  std::vector<std::size_t> picks;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    const auto& child = node.children[i];
    if (child.is_leaf() || child.label != node.label) continue;
    if (node.label == "VP" && follows_auxiliary(node, i)) continue;
    picks.push_back(i);
  }
  return picks;
}

class Extractor {
 public:
  Extractor(const Sentence& sentence, std::vector<std::string> leaves)
      : sentence_(sentence), leaves_(std::move(leaves)) {}

  std::vector<Phrase> run(const ParseTree& s) {
    std::size_t first_vp = s.children.size();
    for (std::size_t i = 0; i < s.children.size(); ++i) {
      if (s.children[i].label == "VP" && !s.children[i].is_leaf()) {
        first_vp = i;
        break;
      }
    }
    // Subject slot: the last NP/SBAR/S child before the first VP.
    std::size_t subject = s.children.size();
    for (std::size_t i = 0; i < first_vp; ++i) {
      const auto& label = s.children[i].label;
      if (!s.children[i].is_leaf() && (label == "NP" || label == "SBAR" || label == "S")) subject = i;
    }

    for (std::size_t i = 0; i < s.children.size(); ++i) {
      const auto& child = s.children[i];
      if (child.is_leaf()) continue;
      if (child.label == "NP" || child.label == "VP") {
        const auto kind = child.label == "NP" ? PhraseKind::NP : PhraseKind::VP;
        const auto parent_id = add(child, kind, 1, {});
        if (!parent_id) continue;
        const auto subs = parallel_children(child);
        if (subs.size() < 2) continue;
        for (const auto j : subs) add(child.children[j], kind, 2, {*parent_id});
      } else if (i == subject) {
        add(child, PhraseKind::NP, 1, {});
      }
    }
    return std::move(phrases_);
  }

 private:
  std::optional<std::string> add(const ParseTree& node, PhraseKind kind, int level,
                                 std::set<std::string> ancestors) {
    Phrase phrase;
    phrase.id = sentence_.id + "/p" + std::to_string(phrases_.size());
    phrase.sentence_id = sentence_.id;
    phrase.kind = kind;
    phrase.node_label = node.label;
    phrase.begin = node.begin;
    phrase.end = node.end;
    phrase.level = level;
    phrase.ancestors = std::move(ancestors);
    phrase.leaves.assign(leaves_.begin() + static_cast<std::ptrdiff_t>(node.begin),
                         leaves_.begin() + static_cast<std::ptrdiff_t>(node.end));
    phrase.word_count = count_words(phrase.text());
    if (phrase.word_count == 0) return std::nullopt;
    phrases_.push_back(std::move(phrase));
    return phrases_.back().id;
  }

  const Sentence& sentence_;
  std::vector<std::string> leaves_;
  std::vector<Phrase> phrases_;
};

}  // namespace

std::string_view to_string(PhraseKind kind) { return kind == PhraseKind::NP ? "NP" : "VP"; }

std::pair<std::size_t, std::size_t> Phrase::trimmed_span() const {
  std::size_t first = 0;
  std::size_t last = leaves.size();
  while (first < last && is_punctuation_leaf(leaves[first])) ++first;
  while (last > first && is_punctuation_leaf(leaves[last - 1])) --last;
  return {begin + first, begin + last};
}

std::string Phrase::text() const {
  const auto [first, last] = trimmed_span();
  return detokenize(std::vector<std::string>(leaves.begin() + static_cast<std::ptrdiff_t>(first - begin),
                                             leaves.begin() + static_cast<std::ptrdiff_t>(last - begin)));
}

std::vector<Phrase> extract_phrases(const ParseTree& tree, const Sentence& sentence) {
  const ParseTree* s = find_sentence_node(tree);
  if (s == nullptr) throw Error(ErrorCode::NoSentenceNode, "no S node in parse of '" + sentence.id + "'");
  return Extractor(sentence, tree.leaves()).run(*s);
}

std::vector<Token> tokenize_leaves(const std::vector<std::string>& leaves) {
  std::string joined;
  for (const auto& leaf : leaves) {
    if (!joined.empty()) joined.push_back(' ');
    joined += unescape_ptb(leaf);
  }
  return tokenize(joined);
}

}  // namespace ramds
