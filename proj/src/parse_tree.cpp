#include "ramds/parse_tree.hpp"

#include <cctype>
#include <string>
#include <variant>

#include "ramds/error.hpp"

namespace ramds {
namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  ParseTree read_root() {
    skip_space();
    if (pos_ >= text_.size()) throw Error(ErrorCode::EmptyTree, "no bracketed expression");
    if (text_[pos_] != '(') {
      throw Error(ErrorCode::UnbalancedBrackets,
                  "expected '(' at position " + std::to_string(pos_));
    }
    auto node = read_node();
    skip_space();
    if (pos_ < text_.size()) {
      throw Error(ErrorCode::UnbalancedBrackets,
                  "unexpected input after tree at position " + std::to_string(pos_));
    }
    if (!node) throw Error(ErrorCode::EmptyTree, "tree has no tokens");
    std::size_t cursor = 0;
    assign_spans(*node, cursor);
    return std::move(*node);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string read_atom() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void unbalanced_at_end() const {
    throw Error(ErrorCode::UnbalancedBrackets,
                "unexpected end of input at position " + std::to_string(text_.size()));
  }

  // Returns nullopt for subtrees that vanish (-NONE- elements, empty brackets).
  std::optional<ParseTree> read_node() {
    ++pos_;  // '('
    skip_space();
    if (pos_ >= text_.size()) unbalanced_at_end();

    ParseTree node;
    if (text_[pos_] != '(' && text_[pos_] != ')') {
      split_label(read_atom(), node);
    }

    std::vector<ParseTree> children;
    std::vector<std::string> bare_tokens;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) unbalanced_at_end();
      const char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '(') {
        if (auto child = read_node()) children.push_back(std::move(*child));
      } else {
        bare_tokens.push_back(read_atom());
      }
    }

    if (node.label == "-NONE-") return std::nullopt;
    if (children.empty() && bare_tokens.size() == 1) {
      node.leaf_token = std::move(bare_tokens.front());
      return node;
    }
    // Bare tokens mixed with subtrees become untagged leaves.
    for (auto& token : bare_tokens) {
      ParseTree leaf;
      leaf.leaf_token = std::move(token);
      children.push_back(std::move(leaf));
    }
    if (children.empty()) return std::nullopt;
    node.children = std::move(children);
    return node;
  }

  static void split_label(const std::string& raw, ParseTree& node) {
    if (raw.empty() || raw.front() == '-') {
      node.label = raw;
      return;
    }
    const std::size_t cut = raw.find_first_of("-=");
    if (cut == std::string::npos || cut == 0) {
      node.label = raw;
      return;
    }
    node.label = raw.substr(0, cut);
    node.function_tag = raw.substr(cut + 1);
  }

  static void assign_spans(ParseTree& node, std::size_t& cursor) {
    node.begin = cursor;
    if (node.is_leaf()) {
      ++cursor;
    } else {
      for (auto& child : node.children) assign_spans(child, cursor);
    }
    node.end = cursor;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect(const ParseTree& node, std::vector<std::string>& out, bool tags) {
  if (node.is_leaf()) {
    out.push_back(tags ? node.label : *node.leaf_token);
    return;
  }
  for (const auto& child : node.children) collect(child, out, tags);
}

void write(const ParseTree& node, std::string& out) {
  out.push_back('(');
  out += node.label;
  if (!node.function_tag.empty()) out += "-" + node.function_tag;
  if (node.is_leaf()) {
    if (!node.label.empty()) out.push_back(' ');
    out += *node.leaf_token;
  } else {
    for (const auto& child : node.children) {
      out.push_back(' ');
      write(child, out);
    }
  }
  out.push_back(')');
}

}  // namespace

std::vector<std::string> ParseTree::leaves() const {
  std::vector<std::string> out;
  collect(*this, out, false);
  return out;
}

std::vector<std::string> ParseTree::tags() const {
  std::vector<std::string> out;
  collect(*this, out, true);
  return out;
}

ParseTree parse_ptb(std::string_view text) { return Reader(text).read_root(); }

std::string to_ptb(const ParseTree& tree) {
  std::string out;
  write(tree, out);
  return out;
}

}  // namespace ramds
