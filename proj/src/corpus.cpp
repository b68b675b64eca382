#include "ramds/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>

#include <json.hpp>

#include "ramds/error.hpp"

namespace ramds {
namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(EntityType type) {
  switch (type) {
    case EntityType::Person:
      return "Person";
    case EntityType::Location:
      return "Location";
    case EntityType::Organization:
      return "Organization";
  }
  return "Person";
}

std::optional<EntityType> parse_entity_type(std::string_view name) {
  const std::string lower = to_lower(name);
  if (lower == "person" || lower == "per") return EntityType::Person;
  if (lower == "location" || lower == "loc" || lower == "gpe") return EntityType::Location;
  if (lower == "organization" || lower == "organisation" || lower == "org")
    return EntityType::Organization;
  return std::nullopt;
}

Dictionary::Dictionary(std::vector<std::string> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], static_cast<int>(i));
}

std::optional<int> Dictionary::find(const std::string& term) const {
  const auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TermVector::TermVector(std::vector<std::pair<int, double>> entries) {
  std::sort(entries.begin(), entries.end());
  double sq = 0.0;
  for (const auto& [column, value] : entries) {
    if (value == 0.0) continue;
    entries_.emplace_back(column, value);
    sq += value * value;
  }
  norm2_ = std::sqrt(sq);
}

double TermVector::at(int column) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(column, -HUGE_VAL));
  return (it != entries_.end() && it->first == column) ? it->second : 0.0;
}

double dot(const TermVector& a, const TermVector& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].first < y[j].first) {
      ++i;
    } else if (y[j].first < x[i].first) {
      ++j;
    } else {
      sum += x[i].second * y[j].second;
      ++i;
      ++j;
    }
  }
  return sum;
}

double cosine(const TermVector& a, const TermVector& b) {
  if (a.is_zero() || b.is_zero()) return 0.0;
  return dot(a, b) / (a.norm2() * b.norm2());
}

std::vector<const Sentence*> Topic::news_sentences() const {
  std::vector<const Sentence*> out;
  for (const auto& doc : documents)
    for (const auto& paragraph : doc.paragraphs)
      for (const auto& sentence : paragraph) out.push_back(&sentence);
  return out;
}

const Sentence* Topic::find_sentence(const std::string& id) const {
  for (const auto* s : news_sentences())
    if (s->id == id) return s;
  for (const auto& s : comment_sentences)
    if (s.id == id) return &s;
  return nullptr;
}

const Document* Topic::find_document(const std::string& id) const {
  for (const auto& doc : documents)
    if (doc.id == id) return &doc;
  return nullptr;
}

namespace {

[[noreturn]] void malformed(const fs::path& file, std::size_t line, const std::string& what) {
  std::string shown = file.filename().string();
  const std::string parent = file.parent_path().filename().string();
  if (parent == "docs" || parent == "parses") shown = parent + "/" + shown;
  throw Error(ErrorCode::MalformedBundle, shown + ":" + std::to_string(line) + ": " + what);
}

std::string read_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedBundle, "cannot read " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::size_t line_of_needle(const std::string& text, const std::string& needle) {
  const auto pos = text.find(needle);
  return pos == std::string::npos ? 1 : line_of_offset(text, pos);
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> read_lines(const std::string& content) {
  std::vector<Line> lines;
  std::istringstream in(content);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back({number, line});
  }
  return lines;
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

// "id<TAB>text" assigns an explicit sentence id; otherwise the default is used.
std::pair<std::string, std::string> split_id(const std::string& line, std::string default_id) {
  const auto tab = line.find('\t');
  if (tab == std::string::npos) return {std::move(default_id), trim(line)};
  return {trim(line.substr(0, tab)), trim(line.substr(tab + 1))};
}

json parse_json_file(const fs::path& file, const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(file, line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
}

void load_documents(Topic& topic, const fs::path& root, const json& meta, const std::string& meta_text) {
  const fs::path meta_file = root / "topic.json";
  if (!meta.contains("documents") || !meta["documents"].is_array() || meta["documents"].empty())
    malformed(meta_file, line_of_needle(meta_text, "\"documents\""), "'documents' must be a nonempty array");

  std::unordered_set<std::string> doc_ids;
  for (const auto& entry : meta["documents"]) {
    if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string())
      malformed(meta_file, line_of_needle(meta_text, "\"documents\""), "document entry needs a string 'id'");
    Document doc;
    doc.id = entry["id"].get<std::string>();
    const std::size_t meta_line = line_of_needle(meta_text, "\"" + doc.id + "\"");
    if (!entry.contains("timestamp") || !entry["timestamp"].is_number_integer())
      malformed(meta_file, meta_line, "document '" + doc.id + "' needs an integer 'timestamp'");
    doc.timestamp = entry["timestamp"].get<std::int64_t>();
    if (!doc_ids.insert(doc.id).second)
      throw Error(ErrorCode::DuplicateId, "document id '" + doc.id + "' appears twice");

    const fs::path text_file = root / "docs" / (doc.id + ".txt");
    if (!fs::exists(text_file)) malformed(text_file, 0, "missing document text");
    const auto lines = read_lines(read_file(text_file));

    std::vector<std::size_t> line_numbers;
    std::vector<Sentence> current;
    int position = 0;
    for (const auto& line : lines) {
      if (is_blank(line.text)) {
        if (!current.empty()) doc.paragraphs.push_back(std::move(current));
        current.clear();
        continue;
      }
      Sentence s;
      std::tie(s.id, s.raw_text) = split_id(line.text, doc.id + "." + std::to_string(position));
      s.origin = Origin::News;
      s.doc_id = doc.id;
      s.paragraph_index = static_cast<int>(doc.paragraphs.size());
      s.position_in_doc = position++;
      s.tokens = tokenize(s.raw_text);
      if (s.tokens.empty()) malformed(text_file, line.number, "sentence has no word tokens");
      line_numbers.push_back(line.number);
      current.push_back(std::move(s));
    }
    if (!current.empty()) doc.paragraphs.push_back(std::move(current));
    if (doc.paragraphs.empty()) malformed(text_file, 1, "document has no sentences");

    // Attach parses, one tree per non-blank line in sentence order.
    const fs::path parse_file = root / "parses" / (doc.id + ".ptb");
    std::vector<Line> trees;
    if (fs::exists(parse_file)) {
      for (auto& line : read_lines(read_file(parse_file)))
        if (!is_blank(line.text)) trees.push_back(std::move(line));
    }
    std::size_t next_tree = 0;
    for (auto& paragraph : doc.paragraphs) {
      for (auto& sentence : paragraph) {
        if (next_tree >= trees.size())
          throw Error(ErrorCode::MissingParse, "news sentence '" + sentence.id + "' has no parse tree");
        const Line& tree_line = trees[next_tree++];
        try {
          sentence.parse = parse_ptb(tree_line.text);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::EmptyTree)
            throw Error(ErrorCode::MissingParse, "news sentence '" + sentence.id + "' has an empty parse tree");
          malformed(parse_file, tree_line.number, e.what());
        }
      }
    }
    if (next_tree < trees.size())
      malformed(parse_file, trees[next_tree].number, "more parse trees than sentences");

    topic.documents.push_back(std::move(doc));
  }
}

void load_comments(Topic& topic, const fs::path& root) {
  const fs::path file = root / "comments.txt";
  if (!fs::exists(file)) return;
  int position = 0;
  for (const auto& line : read_lines(read_file(file))) {
    if (is_blank(line.text)) continue;
    Sentence s;
    std::tie(s.id, s.raw_text) = split_id(line.text, "c" + std::to_string(position));
    s.origin = Origin::Comment;
    s.position_in_doc = position++;
    s.tokens = tokenize(s.raw_text);
    if (s.tokens.empty()) continue;  // nothing to reconstruct
    topic.comment_sentences.push_back(std::move(s));
  }
}

void load_entities(Topic& topic, const fs::path& meta_file, const json& meta, const std::string& meta_text) {
  if (!meta.contains("entities")) return;
  const auto& list = meta["entities"];
  const std::size_t line = line_of_needle(meta_text, "\"entities\"");
  if (!list.is_array()) malformed(meta_file, line, "'entities' must be an array");
  for (const auto& item : list) {
    if (!item.is_object() || !item.contains("type") || !item["type"].is_string() ||
        !item.contains("surfaces") || !item["surfaces"].is_array())
      malformed(meta_file, line, "entity entries need 'type' and 'surfaces'");
    const auto type = parse_entity_type(item["type"].get<std::string>());
    if (!type) continue;  // only person/location/organization are rewritten
    EntityEntry entry;
    entry.type = *type;
    for (const auto& surface : item["surfaces"]) {
      if (!surface.is_string()) malformed(meta_file, line, "entity surfaces must be strings");
      entry.surfaces.push_back(surface.get<std::string>());
    }
    if (!entry.surfaces.empty()) topic.entities.push_back(std::move(entry));
  }
}

}  // namespace

Topic load_topic(const fs::path& path, const CorpusConfig& config) {
  Topic topic;
  topic.bundle_path = path;
  const fs::path meta_file = path / "topic.json";
  if (!fs::exists(meta_file)) throw Error(ErrorCode::MalformedBundle, "missing " + meta_file.string());
  const std::string meta_text = read_file(meta_file);
  const json meta = parse_json_file(meta_file, meta_text);
  if (!meta.is_object()) malformed(meta_file, 1, "top level must be an object");
  if (!meta.contains("id") || !meta["id"].is_string())
    malformed(meta_file, 1, "missing string field 'id'");
  topic.id = meta["id"].get<std::string>();
  if (meta.contains("length_budget_words")) {
    const auto& budget = meta["length_budget_words"];
    if (!budget.is_number_integer() || budget.get<long long>() <= 0)
      malformed(meta_file, line_of_needle(meta_text, "\"length_budget_words\""),
                "'length_budget_words' must be a positive integer");
    topic.length_budget_words = budget.get<int>();
  }

  load_documents(topic, path, meta, meta_text);
  if (config.load_comments) load_comments(topic, path);
  load_entities(topic, meta_file, meta, meta_text);

  std::unordered_set<std::string> ids;
  auto check = [&ids](const std::string& id) {
    if (!ids.insert(id).second) throw Error(ErrorCode::DuplicateId, "sentence id '" + id + "' appears twice");
  };
  for (const auto* s : topic.news_sentences()) check(s->id);
  for (const auto& s : topic.comment_sentences) check(s.id);

  topic.dictionary = build_dictionary(topic);
  return topic;
}

std::vector<std::string> extract_terms(const std::vector<Token>& tokens) {
  std::vector<std::string> terms;
  const std::string* previous = nullptr;
  for (const auto& token : tokens) {
    if (token.is_stopword) continue;
    terms.push_back(token.stem);
    if (previous != nullptr) terms.push_back(*previous + "_" + token.stem);
    previous = &token.stem;
  }
  return terms;
}

Dictionary build_dictionary(const Topic& topic) {
  std::set<std::string> terms;
  for (const auto* sentence : topic.news_sentences())
    for (auto& term : extract_terms(sentence->tokens)) terms.insert(std::move(term));
  if (terms.empty()) throw Error(ErrorCode::EmptyDictionary, "topic '" + topic.id + "' has no news terms");
  return Dictionary(std::vector<std::string>(terms.begin(), terms.end()));
}

TermVector vectorize(const std::vector<Token>& tokens, const Dictionary& dict) {
  std::map<int, double> counts;
  for (const auto& term : extract_terms(tokens)) {
    if (const auto column = dict.find(term)) counts[*column] += 1.0;
  }
  return TermVector(std::vector<std::pair<int, double>>(counts.begin(), counts.end()));
}

TermVector vectorize(const Sentence& sentence, const Dictionary& dict) {
  return vectorize(sentence.tokens, dict);
}

}  // namespace ramds
