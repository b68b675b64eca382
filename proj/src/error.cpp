#include "ramds/error.hpp"

namespace ramds {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedBundle: return "MalformedBundle";
    case ErrorCode::MissingParse: return "MissingParse";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::EmptyDictionary: return "EmptyDictionary";
    case ErrorCode::UnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorCode::EmptyTree: return "EmptyTree";
    case ErrorCode::NoSentenceNode: return "NoSentenceNode";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::MalformedMentions: return "MalformedMentions";
    case ErrorCode::SpanOutOfRange: return "SpanOutOfRange";
    case ErrorCode::NoNonPronounMention: return "NoNonPronounMention";
    case ErrorCode::EmptyPool: return "EmptyPool";
    case ErrorCode::EmptyReference: return "EmptyReference";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Error";
}

}  // namespace ramds
