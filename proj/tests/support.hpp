#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "ramds/corpus.hpp"
#include "ramds/error.hpp"
#include "ramds/salience.hpp"
#include "ramds/treebank.hpp"

namespace testing {

namespace fs = std::filesystem;

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = fs::temp_directory_path() /
            ("ramds_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }

  void write(const std::string& relative, const std::string& content) const {
    const fs::path p = path_ / relative;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
  }

 private:
  fs::path path_;
};

inline std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs f and returns the error code it threw, or nullopt.
template <class F>
std::optional<ramds::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const ramds::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// A two-sentence, one-document bundle used as a starting point for corrupt variants.
inline std::map<std::string, std::string> small_bundle() {
  return {
      {"topic.json", R"({"id": "t", "length_budget_words": 20, "documents": [{"id": "d1", "timestamp": 5}]})"},
      {"docs/d1.txt", "The storm hit the coast on Monday.\n\nFloods closed the main road.\n"},
      {"parses/d1.ptb",
       "(ROOT (S (NP (DT The) (NN storm)) (VP (VBD hit) (NP (DT the) (NN coast)) (PP (IN on) (NP (NNP Monday)))) (. .)))\n"
       "(ROOT (S (NP (NNS Floods)) (VP (VBD closed) (NP (DT the) (JJ main) (NN road))) (. .)))\n"},
      {"comments.txt", "The storm was scary.\n\n!!!\nRoads are still closed.\n"},
  };
}

inline void write_bundle(const TempDir& dir, const std::map<std::string, std::string>& files) {
  for (const auto& [name, content] : files) dir.write(name, content);
}

struct DocSpec {
  std::string id;
  std::int64_t timestamp = 0;
  std::vector<std::string> trees;  // PTB, one sentence each
};

// A topic assembled in memory; sentence ids are "<doc>.<position>".
inline ramds::Topic build_topic(const std::vector<DocSpec>& docs) {
  ramds::Topic topic;
  topic.id = "synthetic";
  for (const auto& d : docs) {
    ramds::Document doc;
    doc.id = d.id;
    doc.timestamp = d.timestamp;
    doc.paragraphs.emplace_back();
    for (std::size_t i = 0; i < d.trees.size(); ++i) {
      ramds::Sentence s;
      s.id = d.id + "." + std::to_string(i);
      s.doc_id = d.id;
      s.position_in_doc = static_cast<int>(i);
      s.parse = ramds::parse_ptb(d.trees[i]);
      s.raw_text = ramds::detokenize(s.parse->leaves());
      s.tokens = ramds::tokenize(s.raw_text);
      doc.paragraphs[0].push_back(std::move(s));
    }
    topic.documents.push_back(std::move(doc));
  }
  return topic;
}

inline ramds::Topic make_topic(const std::vector<std::string>& trees) { return build_topic({{"d", 0, trees}}); }

// Every extracted phrase with expressiveness 1 and the given salience.
inline std::vector<ramds::SaliencedPhrase> phrases_of(const ramds::Topic& topic, double salience = 0.0) {
  std::vector<ramds::SaliencedPhrase> pool;
  for (const auto* s : topic.news_sentences())
    for (auto& p : ramds::extract_phrases(*s->parse, *s)) {
      ramds::SaliencedPhrase sp;
      sp.unigrams = ramds::phrase_unigrams(p);
      sp.phrase = std::move(p);
      sp.expressiveness = 1.0;
      sp.salience = salience;
      pool.push_back(std::move(sp));
    }
  return pool;
}

}  // namespace testing
