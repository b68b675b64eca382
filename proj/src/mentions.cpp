#include "ramds/mentions.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "ramds/error.hpp"

namespace ramds {
namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

std::vector<std::string> mention_stems(const std::string& surface) {
  std::vector<std::string> stems;
  for (const auto& token : tokenize(surface))
    if (!token.is_stopword) stems.push_back(token.stem);
  return stems;
}

bool mention_less(const Mention& a, const Mention& b) { return a.order_key() < b.order_key(); }

struct SentenceInfo {
  const Sentence* sentence;
  int doc_rank;
};

std::unordered_map<std::string, SentenceInfo> index_news(const Topic& topic) {
  std::unordered_map<std::string, SentenceInfo> index;
  for (std::size_t d = 0; d < topic.documents.size(); ++d)
    for (const auto& paragraph : topic.documents[d].paragraphs)
      for (const auto& s : paragraph) index.emplace(s.id, SentenceInfo{&s, static_cast<int>(d)});
  return index;
}

std::string read_text(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool capitalized(const std::string& word) {
  return !word.empty() && std::isupper(static_cast<unsigned char>(word.front())) != 0;
}

}  // namespace

int Mention::word_count() const { return count_words(surface); }

MentionForms select_forms(const std::vector<Mention>& mentions) {
  std::vector<const Mention*> ordered;
  for (const auto& m : mentions) ordered.push_back(&m);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Mention* a, const Mention* b) { return mention_less(*a, *b); });

  std::unordered_map<std::string, double> tf;
  for (const auto* m : ordered)
    for (const auto& stem : mention_stems(m->surface)) tf[stem] += 1.0;
  auto score = [&tf](const Mention& m) {
    double sum = 0.0;
    for (const auto& stem : mention_stems(m.surface)) sum += tf[stem];
    return sum;
  };

  const Mention* full = nullptr;
  double full_score = -1.0;
  int shortest = 0;
  for (const auto* m : ordered) {
    if (m->is_pronoun) continue;
    const double s = score(*m);
    if (s > full_score) {
      full_score = s;
      full = m;
    }
    if (shortest == 0 || m->word_count() < shortest) shortest = m->word_count();
  }
  if (full == nullptr) throw Error(ErrorCode::NoNonPronounMention, "cluster has only pronoun mentions");

  const Mention* short_form = nullptr;
  double short_score = -1.0;
  for (const auto* m : ordered) {
    if (m->is_pronoun || m->word_count() != shortest) continue;
    const double s = score(*m);
    if (s > short_score) {
      short_score = s;
      short_form = m;
    }
  }
  return {*full, *short_form};
}

std::vector<std::vector<Mention>> merge_clusters(const std::vector<DocumentCluster>& clusters) {
  // Visit clusters in a canonical order so the output is independent of input order.
  std::vector<std::size_t> order(clusters.size());
  std::iota(order.begin(), order.end(), 0);
  auto first_key = [&](std::size_t i) {
    const auto it = std::min_element(clusters[i].mentions.begin(), clusters[i].mentions.end(), mention_less);
    return it == clusters[i].mentions.end() ? Mention{}.order_key() : it->order_key();
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::make_tuple(first_key(a), clusters[a].entity_type, clusters[a].mentions.size()) <
           std::make_tuple(first_key(b), clusters[b].entity_type, clusters[b].mentions.size());
  });

  DisjointSet sets(clusters.size());
  std::map<std::pair<EntityType, std::string>, std::size_t> owner;
  std::map<std::string, std::size_t> key_owner;
  for (const std::size_t i : order) {
    if (!clusters[i].entity_key.empty()) {
      const auto [it, inserted] = key_owner.emplace(clusters[i].entity_key, i);
      if (!inserted) sets.unite(it->second, i);
    }
    for (const auto& m : clusters[i].mentions) {
      if (m.is_pronoun) continue;
      const auto key = std::make_pair(clusters[i].entity_type, to_lower(m.surface));
      const auto [it, inserted] = owner.emplace(key, i);
      if (!inserted) sets.unite(it->second, i);
    }
  }

  std::map<std::size_t, std::vector<Mention>> groups;
  for (const std::size_t i : order) {
    auto& group = groups[sets.find(i)];
    group.insert(group.end(), clusters[i].mentions.begin(), clusters[i].mentions.end());
  }
  std::vector<std::vector<Mention>> merged;
  for (auto& [root, mentions] : groups) {
    std::sort(mentions.begin(), mentions.end(), mention_less);
    mentions.erase(std::unique(mentions.begin(), mentions.end(),
                               [](const Mention& a, const Mention& b) {
                                 return a.sentence_id == b.sentence_id && a.begin == b.begin && a.end == b.end;
                               }),
                   mentions.end());
    if (!mentions.empty()) merged.push_back(std::move(mentions));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return mention_less(a.front(), b.front()); });
  return merged;
}

std::vector<MentionCluster> finalize_clusters(const std::vector<DocumentCluster>& clusters) {
  auto merged = merge_clusters(clusters);

  // Overlapping mentions in one sentence cannot both be rewritten: keep the
  // earliest-starting (then longest) one.
  struct Ref {
    std::size_t group;
    std::size_t index;
  };
  std::map<std::string, std::vector<Ref>> by_sentence;
  for (std::size_t g = 0; g < merged.size(); ++g)
    for (std::size_t i = 0; i < merged[g].size(); ++i) by_sentence[merged[g][i].sentence_id].push_back({g, i});
  std::vector<std::vector<bool>> keep(merged.size());
  for (std::size_t g = 0; g < merged.size(); ++g) keep[g].assign(merged[g].size(), false);
  for (auto& [sentence_id, refs] : by_sentence) {
    std::sort(refs.begin(), refs.end(), [&](const Ref& a, const Ref& b) {
      const auto& ma = merged[a.group][a.index];
      const auto& mb = merged[b.group][b.index];
      return std::make_tuple(ma.begin, mb.end, a.group) < std::make_tuple(mb.begin, ma.end, b.group);
    });
    std::size_t covered = 0;
    for (const auto& ref : refs) {
      const auto& m = merged[ref.group][ref.index];
      if (m.begin < covered) continue;
      keep[ref.group][ref.index] = true;
      covered = m.end;
    }
  }

  std::vector<MentionCluster> out;
  for (std::size_t g = 0; g < merged.size(); ++g) {
    std::vector<Mention> mentions;
    for (std::size_t i = 0; i < merged[g].size(); ++i)
      if (keep[g][i]) mentions.push_back(merged[g][i]);
    if (mentions.empty()) continue;
    MentionCluster cluster;
    try {
      const auto forms = select_forms(mentions);
      cluster.full_form = forms.full_form;
      cluster.short_form = forms.short_form;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoNonPronounMention) throw;
      continue;
    }
    cluster.entity_type = mentions.front().entity_type;
    cluster.mentions = std::move(mentions);
    cluster.id = "e" + std::to_string(out.size());
    out.push_back(std::move(cluster));
  }
  return out;
}

std::vector<DocumentCluster> parse_mentions_json(const Topic& topic, const std::string& text) {
  using nlohmann::json;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedMentions, e.what());
  }
  if (!root.is_array()) throw Error(ErrorCode::MalformedMentions, "top level must be a list of clusters");

  const auto sentences = index_news(topic);
  std::vector<DocumentCluster> clusters;
  for (std::size_t c = 0; c < root.size(); ++c) {
    const auto& item = root[c];
    const std::string where = "cluster " + std::to_string(c);
    if (!item.is_object() || !item.contains("doc_id") || !item["doc_id"].is_string() ||
        !item.contains("entity_type") || !item["entity_type"].is_string() || !item.contains("mentions") ||
        !item["mentions"].is_array() || item["mentions"].empty())
      throw Error(ErrorCode::MalformedMentions, where + ": needs doc_id, entity_type and a nonempty mentions list");
    DocumentCluster cluster;
    cluster.doc_id = item["doc_id"].get<std::string>();
    if (topic.find_document(cluster.doc_id) == nullptr)
      throw Error(ErrorCode::MalformedMentions, where + ": unknown document '" + cluster.doc_id + "'");
    const auto type = parse_entity_type(item["entity_type"].get<std::string>());

    for (const auto& m : item["mentions"]) {
      if (!m.is_object() || !m.contains("sentence_id") || !m["sentence_id"].is_string() || !m.contains("start") ||
          !m["start"].is_number_integer() || !m.contains("end") || !m["end"].is_number_integer() ||
          !m.contains("surface") || !m["surface"].is_string())
        throw Error(ErrorCode::MalformedMentions, where + ": mention needs sentence_id, start, end, surface");
      if (m.contains("is_pronoun") && !m["is_pronoun"].is_boolean())
        throw Error(ErrorCode::MalformedMentions, where + ": is_pronoun must be a boolean");
      Mention mention;
      mention.sentence_id = m["sentence_id"].get<std::string>();
      const auto it = sentences.find(mention.sentence_id);
      if (it == sentences.end() || it->second.sentence->doc_id != cluster.doc_id)
        throw Error(ErrorCode::MalformedMentions,
                    where + ": sentence '" + mention.sentence_id + "' is not a news sentence of " + cluster.doc_id);
      const long long start = m["start"].get<long long>();
      const long long end = m["end"].get<long long>();
      const auto leaf_count = static_cast<long long>(it->second.sentence->parse->end);
      if (start < 0 || end <= start || end > leaf_count)
        throw Error(ErrorCode::SpanOutOfRange, where + ": span [" + std::to_string(start) + ", " +
                                                   std::to_string(end) + ") outside sentence '" +
                                                   mention.sentence_id + "'");
      mention.begin = static_cast<std::size_t>(start);
      mention.end = static_cast<std::size_t>(end);
      mention.surface = m["surface"].get<std::string>();
      mention.is_pronoun = (m.contains("is_pronoun") && m["is_pronoun"].get<bool>()) || is_pronoun(mention.surface);
      mention.doc_id = cluster.doc_id;
      mention.doc_rank = it->second.doc_rank;
      mention.sentence_position = it->second.sentence->position_in_doc;
      cluster.mentions.push_back(std::move(mention));
    }
    if (!type) continue;  // only person, location and organization entities are kept
    cluster.entity_type = *type;
    for (auto& mention : cluster.mentions) mention.entity_type = *type;
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

std::vector<DocumentCluster> derive_clusters(const Topic& topic) {
  std::vector<DocumentCluster> clusters;
  for (std::size_t d = 0; d < topic.documents.size(); ++d) {
    const auto& doc = topic.documents[d];
    for (std::size_t e = 0; e < topic.entities.size(); ++e) {
      const auto& entity = topic.entities[e];
      // Longest surfaces first so "Barack Obama" wins over "Obama".
      std::vector<std::vector<std::string>> patterns;
      for (const auto& surface : entity.surfaces) {
        std::istringstream in(surface);
        std::vector<std::string> words;
        for (std::string w; in >> w;) words.push_back(w);
        if (!words.empty() && capitalized(words.front())) patterns.push_back(std::move(words));
      }
      std::stable_sort(patterns.begin(), patterns.end(),
                       [](const auto& a, const auto& b) { return a.size() > b.size(); });

      DocumentCluster cluster;
      cluster.doc_id = doc.id;
      cluster.entity_type = entity.type;
      cluster.entity_key = "gazetteer:" + std::to_string(e);
      for (const auto& paragraph : doc.paragraphs) {
        for (const auto& sentence : paragraph) {
          const auto leaves = sentence.parse->leaves();
          std::vector<bool> used(leaves.size(), false);
          std::vector<Mention> found;
          for (const auto& pattern : patterns) {
            for (std::size_t i = 0; i + pattern.size() <= leaves.size(); ++i) {
              bool match = true;
              for (std::size_t k = 0; k < pattern.size() && match; ++k)
                match = !used[i + k] && leaves[i + k] == pattern[k];
              if (!match) continue;
              Mention m;
              m.begin = i;
              m.end = i + pattern.size();
              for (std::size_t k = m.begin; k < m.end; ++k) used[k] = true;
              m.surface = detokenize(std::vector<std::string>(leaves.begin() + static_cast<std::ptrdiff_t>(m.begin),
                                                              leaves.begin() + static_cast<std::ptrdiff_t>(m.end)));
              m.sentence_id = sentence.id;
              m.doc_id = doc.id;
              m.entity_type = entity.type;
              m.doc_rank = static_cast<int>(d);
              m.sentence_position = sentence.position_in_doc;
              found.push_back(std::move(m));
            }
          }
          std::sort(found.begin(), found.end(), mention_less);
          cluster.mentions.insert(cluster.mentions.end(), found.begin(), found.end());
        }
      }
      if (!cluster.mentions.empty()) clusters.push_back(std::move(cluster));
    }
  }
  return clusters;
}

std::vector<MentionCluster> load_or_derive_clusters(const Topic& topic) {
  const auto file = topic.bundle_path / "mentions.json";
  if (!topic.bundle_path.empty() && std::filesystem::exists(file))
    return finalize_clusters(parse_mentions_json(topic, read_text(file)));
  return finalize_clusters(derive_clusters(topic));
}

}  // namespace ramds
