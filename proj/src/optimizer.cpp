#include "ramds/optimizer.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "ramds/error.hpp"

namespace ramds {
namespace {

int span_words(const std::vector<std::string>& leaves, std::size_t begin, std::size_t end) {
  return count_words(detokenize(std::vector<std::string>(leaves.begin() + static_cast<std::ptrdiff_t>(begin),
                                                         leaves.begin() + static_cast<std::ptrdiff_t>(end))));
}

std::string var_suffix(std::size_t i) { return std::to_string(i); }

// Fills beta, pair and gamma variables implied by a set of selected phrases.
std::vector<int> complete_assignment(const IlpModel& model, const std::vector<bool>& selected) {
  std::vector<int> x(model.program.vars.size(), 0);
  for (std::size_t i = 0; i < model.alpha.size(); ++i) {
    if (!selected[i]) continue;
    x[model.alpha[i]] = 1;
    x[model.beta[model.phrase_sentence[i]]] = 1;
  }
  for (const auto& [pair, var] : model.alpha_pair) x[var] = selected[pair.first] && selected[pair.second] ? 1 : 0;
  std::map<std::size_t, std::size_t> full_slot;  // cluster -> chosen slot
  for (std::size_t s = 0; s < model.slots.size(); ++s) {
    const auto& slot = model.slots[s];
    if (!selected[slot.phrase]) continue;
    const auto it = full_slot.find(slot.cluster);
    if (it == full_slot.end()) {
      full_slot.emplace(slot.cluster, s);
      continue;
    }
    const auto& cur = model.slots[it->second];
    if (slot.delta_full - slot.delta_short < cur.delta_full - cur.delta_short) it->second = s;
  }
  for (std::size_t s = 0; s < model.slots.size(); ++s) {
    const auto& slot = model.slots[s];
    if (!selected[slot.phrase]) continue;
    const bool full = full_slot.at(slot.cluster) == s;
    x[full ? slot.gamma_full : slot.gamma_short] = 1;
  }
  return x;
}

}  // namespace

std::vector<SaliencedPhrase> prune_pool(std::vector<SaliencedPhrase> phrases) {
  std::unordered_map<std::string, std::pair<bool, bool>> kinds;
  for (const auto& p : phrases) {
    if (p.expressiveness <= 0.0) continue;
    auto& k = kinds[p.phrase.sentence_id];
    (p.phrase.kind == PhraseKind::NP ? k.first : k.second) = true;
  }
  std::vector<SaliencedPhrase> out;
  for (auto& p : phrases) {
    if (p.expressiveness <= 0.0) continue;
    const auto& k = kinds[p.phrase.sentence_id];
    if (k.first && k.second) out.push_back(std::move(p));
  }
  return out;
}

int sentence_word_count(const Sentence& sentence) {
  if (sentence.parse) return count_words(detokenize(sentence.parse->leaves()));
  return count_words(sentence.raw_text);
}

IlpModel build_model(const std::vector<SaliencedPhrase>& pool, const SimilarityMatrix& sim,
                     const std::vector<MentionCluster>& clusters, const Topic& topic, const OptConfig& config) {
  if (pool.empty()) throw Error(ErrorCode::EmptyPool, "no candidate phrases in topic '" + topic.id + "'");
  if (config.length_budget < 0) throw Error(ErrorCode::InvalidArgument, "negative length budget");

  IlpModel model;
  model.length_budget = config.length_budget;
  auto& prog = model.program;

  // Sentences in order of first appearance in the pool.
  std::unordered_map<std::string, std::size_t> sentence_slot;
  std::vector<const Sentence*> sentences;
  for (const auto& p : pool) {
    const auto& sid = p.phrase.sentence_id;
    if (sentence_slot.count(sid)) continue;
    const Sentence* s = topic.find_sentence(sid);
    if (s == nullptr || !s->parse) throw Error(ErrorCode::InvalidArgument, "phrase refers to unknown sentence " + sid);
    sentence_slot.emplace(sid, sentences.size());
    sentences.push_back(s);
    model.sentence_ids.push_back(sid);
  }

  std::unordered_map<std::string, std::size_t> phrase_index;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& p = pool[i].phrase;
    phrase_index.emplace(p.id, i);
    const Sentence& s = *sentences[sentence_slot.at(p.sentence_id)];
    bool fixed_zero = false;
    if (p.kind == PhraseKind::VP && sentence_word_count(s) < config.short_sentence_threshold) fixed_zero = true;
    if (p.kind == PhraseKind::NP && p.word_count == 1 && is_pronoun(p.text())) fixed_zero = true;
    model.alpha.push_back(prog.add_var("a" + var_suffix(i), pool[i].salience, 0, fixed_zero ? 0 : 1));
    model.phrase_sentence.push_back(sentence_slot.at(p.sentence_id));
    model.phrase_words.push_back(p.word_count);
    model.phrase_kind.push_back(p.kind);
  }
  for (std::size_t k = 0; k < sentences.size(); ++k) model.beta.push_back(prog.add_var("b" + var_suffix(k), 0.0));

  for (const auto& [pair, r] : sim.pairs()) {
    const auto [i, j] = pair;
    if (i >= pool.size() || j >= pool.size()) throw Error(ErrorCode::DimensionMismatch, "similarity pair out of range");
    const double coef = -(pool[i].salience + pool[j].salience) * r;
    model.alpha_pair.emplace(pair, prog.add_var("p" + var_suffix(i) + "_" + var_suffix(j), coef));
  }

  // Mentions inside each phrase: the first one per cluster gets gamma variables.
  model.length_coef = model.phrase_words;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& p = pool[i].phrase;
    const auto [first, last] = p.trimmed_span();
    const auto leaves = sentences[model.phrase_sentence[i]]->parse->leaves();
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      const auto& cluster = clusters[c];
      const int full_words = cluster.full_form.word_count();
      const int short_words = cluster.short_form.word_count();
      bool seen = false;
      for (std::size_t m = 0; m < cluster.mentions.size(); ++m) {
        const auto& mention = cluster.mentions[m];
        if (mention.sentence_id != p.sentence_id || mention.begin < first || mention.end > last) continue;
        PhraseMention base{i, c, m, span_words(leaves, mention.begin, mention.end)};
        if (!seen) {
          RewriteSlot slot;
          static_cast<PhraseMention&>(slot) = base;
          const std::string tag = var_suffix(i) + "_" + cluster.id;
          slot.gamma_full = prog.add_var("gf" + tag, 0.0);
          slot.gamma_short = prog.add_var("gs" + tag, 0.0);
          slot.delta_full = full_words - base.original_words;
          slot.delta_short = short_words - base.original_words;
          model.slots.push_back(slot);
          seen = true;
        } else {
          FixedRewrite fixed;
          static_cast<PhraseMention&>(fixed) = base;
          fixed.delta = short_words - base.original_words;
          model.length_coef[i] += fixed.delta;
          model.fixed_rewrites.push_back(fixed);
        }
      }
    }
  }

  // Compression: a sentence is used iff at least one NP and one VP of it are.
  for (std::size_t k = 0; k < sentences.size(); ++k) {
    for (const PhraseKind kind : {PhraseKind::NP, PhraseKind::VP}) {
      const std::string tag = std::string(to_string(kind)) + "_" + var_suffix(k);
      std::vector<std::pair<std::size_t, double>> any{{model.beta[k], -1.0}};
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (model.phrase_sentence[i] != k || pool[i].phrase.kind != kind) continue;
        prog.add_constraint("sel_" + tag + "_" + var_suffix(i), "compression",
                            {{model.alpha[i], 1.0}, {model.beta[k], -1.0}}, Sense::LessEqual, 0.0);
        any.emplace_back(model.alpha[i], 1.0);
      }
      prog.add_constraint("need_" + tag, "compression", std::move(any), Sense::GreaterEqual, 0.0);
    }
  }

  // Rewriting: one full form per cluster among its selected phrases.
  std::map<std::size_t, std::vector<std::size_t>> slots_of_cluster;
  for (std::size_t s = 0; s < model.slots.size(); ++s) {
    const auto& slot = model.slots[s];
    slots_of_cluster[slot.cluster].push_back(s);
    prog.add_constraint("form_" + var_suffix(slot.phrase) + "_" + clusters[slot.cluster].id, "rewriting",
                        {{slot.gamma_full, 1.0}, {slot.gamma_short, 1.0}, {model.alpha[slot.phrase], -1.0}},
                        Sense::Equal, 0.0);
  }
  for (const auto& [c, slot_ids] : slots_of_cluster) {
    std::vector<std::pair<std::size_t, double>> fulls;
    for (const auto s : slot_ids) fulls.emplace_back(model.slots[s].gamma_full, 1.0);
    prog.add_constraint("onefull_" + clusters[c].id, "rewriting", fulls, Sense::LessEqual, 1.0);
    for (const auto s : slot_ids) {
      auto row = fulls;
      row.emplace_back(model.alpha[model.slots[s].phrase], -1.0);
      prog.add_constraint("hasfull_" + clusters[c].id + "_" + var_suffix(model.slots[s].phrase), "rewriting",
                          std::move(row), Sense::GreaterEqual, 0.0);
    }
  }

  // Not i-within-i.
  for (std::size_t i = 0; i < pool.size(); ++i) {
    std::set<std::size_t> ancestors;
    for (const auto& id : pool[i].phrase.ancestors) {
      const auto it = phrase_index.find(id);
      if (it != phrase_index.end()) ancestors.insert(it->second);
    }
    for (const auto j : ancestors)
      prog.add_constraint("nest_" + var_suffix(j) + "_" + var_suffix(i), "nesting",
                          {{model.alpha[j], 1.0}, {model.alpha[i], 1.0}}, Sense::LessEqual, 1.0);
  }

  // Co-occurrence linearization.
  for (const auto& [pair, var] : model.alpha_pair) {
    const auto [i, j] = pair;
    const std::string tag = var_suffix(i) + "_" + var_suffix(j);
    prog.add_constraint("pair_i_" + tag, "cooccurrence", {{var, 1.0}, {model.alpha[i], -1.0}}, Sense::LessEqual, 0.0);
    prog.add_constraint("pair_j_" + tag, "cooccurrence", {{var, 1.0}, {model.alpha[j], -1.0}}, Sense::LessEqual, 0.0);
    prog.add_constraint("pair_both_" + tag, "cooccurrence",
                        {{model.alpha[i], 1.0}, {model.alpha[j], 1.0}, {var, -1.0}}, Sense::LessEqual, 1.0);
  }

  // Length, with rewriting deltas.
  std::vector<std::pair<std::size_t, double>> length;
  for (std::size_t i = 0; i < pool.size(); ++i) length.emplace_back(model.alpha[i], model.length_coef[i]);
  for (const auto& slot : model.slots) {
    if (slot.delta_full != 0) length.emplace_back(slot.gamma_full, slot.delta_full);
    if (slot.delta_short != 0) length.emplace_back(slot.gamma_short, slot.delta_short);
  }
  prog.add_constraint("length", "length", std::move(length), Sense::LessEqual, config.length_budget);
  return model;
}

int accounted_length(const IlpModel& model, const std::vector<int>& assignment) {
  int words = 0;
  for (std::size_t i = 0; i < model.alpha.size(); ++i) words += assignment.at(model.alpha[i]) * model.length_coef[i];
  for (const auto& slot : model.slots)
    words += assignment.at(slot.gamma_full) * slot.delta_full + assignment.at(slot.gamma_short) * slot.delta_short;
  return words;
}

IlpSolution solve_greedy(const IlpModel& model) {
  const auto& prog = model.program;
  const std::size_t sentences = model.beta.size();
  auto usable = [&](std::size_t i) { return prog.vars[model.alpha[i]].upper == 1; };

  // Best usable NP and VP per sentence by salience, lowest index on ties.
  std::vector<std::pair<long, long>> choice(sentences, {-1, -1});
  for (std::size_t i = 0; i < model.alpha.size(); ++i) {
    if (!usable(i)) continue;
    auto& slot = model.phrase_kind[i] == PhraseKind::NP ? choice[model.phrase_sentence[i]].first : choice[model.phrase_sentence[i]].second;
    if (slot < 0 || prog.vars[model.alpha[i]].objective > prog.vars[model.alpha[static_cast<std::size_t>(slot)]].objective)
      slot = static_cast<long>(i);
  }

  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < sentences; ++k)
    if (choice[k].first >= 0 && choice[k].second >= 0) order.push_back(k);
  auto gain = [&](std::size_t k) {
    return prog.vars[model.alpha[static_cast<std::size_t>(choice[k].first)]].objective +
           prog.vars[model.alpha[static_cast<std::size_t>(choice[k].second)]].objective;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gain(a) > gain(b); });

  std::vector<bool> selected(model.alpha.size(), false);
  std::vector<int> best = complete_assignment(model, selected);
  for (const auto k : order) {
    auto trial = selected;
    trial[static_cast<std::size_t>(choice[k].first)] = true;
    trial[static_cast<std::size_t>(choice[k].second)] = true;
    auto x = complete_assignment(model, trial);
    if (!check_assignment(prog, x).empty()) continue;
    selected = std::move(trial);
    best = std::move(x);
  }

  IlpSolution out;
  out.assignment = std::move(best);
  out.objective = evaluate_objective(prog, out.assignment);
  out.status = IlpStatus::FeasibleWithGap;
  out.nodes_explored = 0;
  return out;
}

IlpSolution solve_model(const IlpModel& model, const OptConfig& config) {
  if (config.greedy) return solve_greedy(model);
  return solve_ilp(model.program, config.ilp);
}

}  // namespace ramds
