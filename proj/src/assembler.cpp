#include "ramds/assembler.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "ramds/error.hpp"

namespace ramds {
namespace {

struct PendingRewrite {
  std::size_t end;
  const MentionCluster* cluster;
  MentionForm form;
  std::string phrase_id;
};

std::string_view form_name(MentionForm form) { return form == MentionForm::Full ? "full" : "short"; }

}  // namespace

std::string SummaryDraft::text() const {
  std::string out;
  for (const auto& s : sentences) {
    out += s.text;
    out += '\n';
  }
  return out;
}

SummaryDraft assemble(const IlpSolution& solution, const IlpModel& model, const std::vector<SaliencedPhrase>& pool,
                      const std::vector<MentionCluster>& clusters, const Topic& topic) {
  const auto& x = solution.assignment;
  SummaryDraft draft;
  draft.objective = solution.objective;
  if (x.size() != model.program.vars.size())
    throw Error(ErrorCode::DimensionMismatch, "assignment does not match the model");

  // Rewrites keyed by (phrase, first leaf).
  std::map<std::pair<std::size_t, std::size_t>, PendingRewrite> rewrites;
  for (const auto& slot : model.slots) {
    if (x[model.alpha[slot.phrase]] == 0) continue;
    const auto& cluster = clusters[slot.cluster];
    const auto& m = cluster.mentions[slot.mention];
    const MentionForm form = x[slot.gamma_full] == 1 ? MentionForm::Full : MentionForm::Short;
    rewrites[{slot.phrase, m.begin}] = {m.end, &cluster, form, pool[slot.phrase].phrase.id};
  }
  for (const auto& fixed : model.fixed_rewrites) {
    if (x[model.alpha[fixed.phrase]] == 0) continue;
    const auto& cluster = clusters[fixed.cluster];
    const auto& m = cluster.mentions[fixed.mention];
    rewrites[{fixed.phrase, m.begin}] = {m.end, &cluster, MentionForm::Short, pool[fixed.phrase].phrase.id};
  }

  std::map<std::size_t, std::vector<std::size_t>> by_sentence;
  for (std::size_t i = 0; i < model.alpha.size(); ++i)
    if (x[model.alpha[i]] == 1) by_sentence[model.phrase_sentence[i]].push_back(i);

  std::vector<std::tuple<std::int64_t, std::size_t, int, std::size_t>> order;
  for (const auto& [k, phrases] : by_sentence) {
    const Sentence* s = topic.find_sentence(model.sentence_ids[k]);
    const auto doc_it = std::find_if(topic.documents.begin(), topic.documents.end(),
                                     [&](const Document& d) { return d.id == s->doc_id; });
    order.emplace_back(doc_it->timestamp, static_cast<std::size_t>(doc_it - topic.documents.begin()),
                       s->position_in_doc, k);
  }
  std::sort(order.begin(), order.end());

  for (const auto& [timestamp, doc_rank, position, k] : order) {
    const Sentence& s = *topic.find_sentence(model.sentence_ids[k]);
    const auto leaves = s.parse->leaves();
    auto phrases = by_sentence[k];
    std::sort(phrases.begin(), phrases.end(), [&](std::size_t a, std::size_t b) {
      return pool[a].phrase.trimmed_span() < pool[b].phrase.trimmed_span();
    });

    DraftSentence out;
    out.sentence_id = s.id;
    out.doc_id = *s.doc_id;
    out.timestamp = timestamp;
    std::vector<std::string> tokens;
    std::vector<std::pair<std::size_t, AppliedRewrite>> applied;  // token index -> rewrite
    for (const auto i : phrases) {
      const auto& phrase = pool[i].phrase;
      out.phrase_ids.push_back(phrase.id);
      const auto [first, last] = phrase.trimmed_span();
      for (std::size_t leaf = first; leaf < last;) {
        const auto it = rewrites.find({i, leaf});
        if (it == rewrites.end()) {
          tokens.push_back(leaves[leaf++]);
          continue;
        }
        const auto& pending = it->second;
        AppliedRewrite rw;
        rw.cluster_id = pending.cluster->id;
        rw.form = pending.form;
        rw.phrase_id = pending.phrase_id;
        rw.original = detokenize(std::vector<std::string>(leaves.begin() + static_cast<std::ptrdiff_t>(leaf),
                                                          leaves.begin() + static_cast<std::ptrdiff_t>(pending.end)));
        rw.replacement = pending.form == MentionForm::Full ? pending.cluster->full_form.surface
                                                           : pending.cluster->short_form.surface;
        applied.emplace_back(tokens.size(), std::move(rw));
        tokens.push_back(applied.back().second.replacement);
        leaf = pending.end;
      }
    }

    std::vector<std::size_t> offsets;
    out.text = detokenize(tokens, offsets);
    if (!out.text.empty() && std::islower(static_cast<unsigned char>(out.text.front())))
      out.text.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(out.text.front())));
    if (!out.text.empty()) {
      const char last = out.text.back();
      if (last != '.' && last != '!' && last != '?') out.text.push_back('.');
    }
    for (auto& [token, rw] : applied) {
      rw.offset = offsets[token];
      out.rewrites.push_back(std::move(rw));
    }
    out.words = count_words(out.text);
    draft.total_words += out.words;
    draft.sentences.push_back(std::move(out));
  }

  const int accounted = accounted_length(model, x);
  if (accounted != draft.total_words)
    throw Error(ErrorCode::InvariantViolation, "summary has " + std::to_string(draft.total_words) +
                                                   " words but the model accounted for " + std::to_string(accounted));
  return draft;
}

nlohmann::json trace_json(const SummaryDraft& draft, const IlpSolution& solution) {
  nlohmann::json sentences = nlohmann::json::array();
  for (const auto& s : draft.sentences) {
    nlohmann::json rewrites = nlohmann::json::array();
    for (const auto& rw : s.rewrites)
      rewrites.push_back({{"cluster", rw.cluster_id},
                          {"form", form_name(rw.form)},
                          {"phrase", rw.phrase_id},
                          {"original", rw.original},
                          {"replacement", rw.replacement},
                          {"offset", rw.offset}});
    sentences.push_back({{"sentence_id", s.sentence_id},
                         {"doc_id", s.doc_id},
                         {"timestamp", s.timestamp},
                         {"phrases", s.phrase_ids},
                         {"text", s.text},
                         {"words", s.words},
                         {"rewrites", std::move(rewrites)}});
  }
  return {{"objective", solution.objective},
          {"status", to_string(solution.status)},
          {"gap", solution.gap},
          {"nodes_explored", solution.nodes_explored},
          {"total_words", draft.total_words},
          {"sentences", std::move(sentences)}};
}

}  // namespace ramds
