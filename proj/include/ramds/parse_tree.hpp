#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramds {

// Constituency tree node. Pre-terminals are stored as leaves: a leaf carries its
// POS tag in `label` and the word in `leaf_token`, and has no children.
struct ParseTree {
  std::string label;
  std::string function_tag;  // "SBJ" for NP-SBJ; empty when absent
  std::vector<ParseTree> children;
  std::optional<std::string> leaf_token;
  std::size_t begin = 0;  // token span [begin, end)
  std::size_t end = 0;

  bool is_leaf() const { return leaf_token.has_value(); }
  std::size_t size() const { return end - begin; }

  /// Leaf tokens in order, as written in the treebank (PTB escapes kept).
  std::vector<std::string> leaves() const;
  /// Leaf POS tags in order.
  std::vector<std::string> tags() const;
};

/// Parses one bracketed Penn Treebank expression. Functional tags after '-' or
/// '=' are split off into `function_tag`; -NONE- empty elements are dropped.
/// Throws Error{UnbalancedBrackets} or Error{EmptyTree}.
ParseTree parse_ptb(std::string_view text);

/// Round-trips a tree back to one-line bracketed form (function tags restored).
std::string to_ptb(const ParseTree& tree);

}  // namespace ramds
