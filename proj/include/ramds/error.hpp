#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramds {

enum class ErrorCode {
  MalformedBundle,
  MissingParse,
  DuplicateId,
  EmptyDictionary,
  UnbalancedBrackets,
  EmptyTree,
  NoSentenceNode,
  ZeroVector,
  DimensionMismatch,
  NonFiniteLoss,
  MalformedMentions,
  SpanOutOfRange,
  NoNonPronounMention,
  EmptyPool,
  EmptyReference,
  InvalidArgument,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure in the pipeline is reported through this type; the
// code lets callers (and tests) branch on the failure kind without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ramds
