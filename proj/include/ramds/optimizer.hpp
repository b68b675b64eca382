#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ramds/corpus.hpp"
#include "ramds/ilp.hpp"
#include "ramds/mentions.hpp"
#include "ramds/salience.hpp"

namespace ramds {

struct OptConfig {
  int length_budget = 100;           // L, in words
  int short_sentence_threshold = 10; // VPs of shorter sentences are never selected
  IlpOptions ilp;
  bool greedy = false;               // debugging fallback, not the default
};

// A mention of an entity cluster inside a candidate phrase.
struct PhraseMention {
  std::size_t phrase = 0;
  std::size_t cluster = 0;
  std::size_t mention = 0;  // index into the cluster's mentions
  int original_words = 0;
};

// The first mention of a cluster in a phrase: rewritten to full or short form
// as the gamma variables decide.
struct RewriteSlot : PhraseMention {
  std::size_t gamma_full = 0;
  std::size_t gamma_short = 0;
  int delta_full = 0;
  int delta_short = 0;
};

// A later mention of the same cluster in the same phrase, always short form.
struct FixedRewrite : PhraseMention {
  int delta = 0;
};

struct IlpModel {
  BinaryProgram program;
  std::vector<std::size_t> alpha;                                     // per pool phrase
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> alpha_pair;  // per stored similarity pair
  std::vector<std::string> sentence_ids;                              // sentences with candidates
  std::vector<std::size_t> beta;                                      // per sentence
  std::vector<std::size_t> phrase_sentence;                           // pool phrase -> sentence slot
  std::vector<RewriteSlot> slots;
  std::vector<FixedRewrite> fixed_rewrites;
  std::vector<PhraseKind> phrase_kind;
  std::vector<int> phrase_words;   // w_i
  std::vector<int> length_coef;    // w_i plus the fixed rewrite deltas of phrase i
  int length_budget = 0;
};

/// Drops phrases of sentences with zero expressiveness and of sentences that
/// lack either an NP or a VP candidate. Order is preserved.
std::vector<SaliencedPhrase> prune_pool(std::vector<SaliencedPhrase> phrases);

/// Leaf-based word count of a news sentence.
int sentence_word_count(const Sentence& sentence);

/// Builds the selection / compression / rewriting program. `sim` is indexed by
/// pool position. Throws Error{EmptyPool}.
IlpModel build_model(const std::vector<SaliencedPhrase>& pool, const SimilarityMatrix& sim,
                     const std::vector<MentionCluster>& clusters, const Topic& topic, const OptConfig& config);

/// Exact branch-and-bound, or the greedy fallback when config.greedy is set.
IlpSolution solve_model(const IlpModel& model, const OptConfig& config);

/// Sentence-at-a-time greedy selection that always returns a feasible assignment.
IlpSolution solve_greedy(const IlpModel& model);

/// Words of the summary implied by an assignment, rewriting included.
int accounted_length(const IlpModel& model, const std::vector<int>& assignment);

}  // namespace ramds
