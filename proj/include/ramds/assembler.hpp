#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramds/corpus.hpp"
#include "ramds/ilp.hpp"
#include "ramds/mentions.hpp"
#include "ramds/optimizer.hpp"

namespace ramds {

enum class MentionForm { Full, Short };

struct AppliedRewrite {
  std::string cluster_id;
  MentionForm form = MentionForm::Short;
  std::string phrase_id;
  std::string original;
  std::string replacement;
  std::size_t offset = 0;  // byte offset of the replacement in the sentence text
};

struct DraftSentence {
  std::string sentence_id;
  std::string doc_id;
  std::int64_t timestamp = 0;
  std::vector<std::string> phrase_ids;  // in token order
  std::vector<AppliedRewrite> rewrites;
  std::string text;
  int words = 0;
};

struct SummaryDraft {
  std::vector<DraftSentence> sentences;
  int total_words = 0;
  double objective = 0.0;

  /// One sentence per line, with a trailing newline when nonempty.
  std::string text() const;
};

/// Orders the selected sentences by (document timestamp, document order,
/// position), joins each sentence's selected phrases in token order and applies
/// the entity rewrites chosen by the solution. Throws Error{InvariantViolation}
/// when the emitted word count differs from the model's accounting.
SummaryDraft assemble(const IlpSolution& solution, const IlpModel& model, const std::vector<SaliencedPhrase>& pool,
                      const std::vector<MentionCluster>& clusters, const Topic& topic);

nlohmann::json trace_json(const SummaryDraft& draft, const IlpSolution& solution);

}  // namespace ramds
