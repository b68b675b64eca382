#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ramds {

// Version tag of the shipped stopword and pronoun lists. Bump when editing them.
inline constexpr std::string_view kStopwordListVersion = "ramds-en-1";

struct Token {
  std::string surface;
  std::string stem;  // lowercase Porter stem
  bool is_stopword = false;
};

/// Splits on whitespace and punctuation; punctuation is discarded. Bytes >= 0x80
/// are treated as word characters so UTF-8 letters survive intact.
std::vector<std::string> split_words(std::string_view text);

/// Tokenizes, lowercases, stems, and flags stopwords.
std::vector<Token> tokenize(std::string_view text);

std::string to_lower(std::string_view s);

/// Porter (1980) stemmer. Input is lowercased first; non-ASCII words are
/// returned lowercased but otherwise untouched.
std::string porter_stem(std::string_view word);

bool is_stopword(std::string_view lowercase_word);
bool is_pronoun(std::string_view word);

/// True when the token contains at least one letter or digit (or a non-ASCII byte).
bool is_word_token(std::string_view token);

/// Word count used for every length budget: whitespace-separated tokens that
/// are not punctuation-only.
int count_words(std::string_view text);

/// Converts Penn Treebank bracket escapes (-LRB-, ``, ...) back to plain text.
std::string unescape_ptb(std::string_view leaf);

/// Joins leaf tokens into readable text: closing punctuation attaches to the
/// previous token, opening punctuation to the next. Word tokens are always
/// separated by a space, so count_words(detokenize(x)) equals the number of
/// word tokens in x.
std::string detokenize(const std::vector<std::string>& tokens);
/// Same, also reporting the byte offset of each token in the output
/// (std::string::npos for tokens that render as nothing).
std::string detokenize(const std::vector<std::string>& tokens, std::vector<std::size_t>& offsets);

}  // namespace ramds
