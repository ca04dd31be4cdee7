#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace colocal {

enum class ErrorCode {
  // graph construction and interchange
  IndexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  PortClash,
  PortGap,
  IsolatedNode,
  PartialLabels,
  ParseError,
  // graph queries
  MissingColours,
  PortOutOfRange,
  // engine
  MissingInput,
  // star forest
  NotWeaklyColoured,
  MalformedForest,
  // odd-degree dominating set
  NotWeakOnA,
  EvenDelta,
  MissingOrientation,
  ProviderFailure,
  // matching scheme
  NotProperlyColoured,
  ShorterPathExists,
  PathsNotDisjoint,
  NotAugmenting,
  InvalidMatching,
  // oracles
  TooLarge,
  // generators and reductions
  TooSmall,
  DegenerateParams,
  OddN,
  SmallDelta,
  NotInCycle,
  NotIndependentInput,
  InternalAssertion,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::PortClash: return "PortClash";
    case ErrorCode::PortGap: return "PortGap";
    case ErrorCode::IsolatedNode: return "IsolatedNode";
    case ErrorCode::PartialLabels: return "PartialLabels";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingColours: return "MissingColours";
    case ErrorCode::PortOutOfRange: return "PortOutOfRange";
    case ErrorCode::MissingInput: return "MissingInput";
    case ErrorCode::NotWeaklyColoured: return "NotWeaklyColoured";
    case ErrorCode::MalformedForest: return "MalformedForest";
    case ErrorCode::NotWeakOnA: return "NotWeakOnA";
    case ErrorCode::EvenDelta: return "EvenDelta";
    case ErrorCode::MissingOrientation: return "MissingOrientation";
    case ErrorCode::ProviderFailure: return "ProviderFailure";
    case ErrorCode::NotProperlyColoured: return "NotProperlyColoured";
    case ErrorCode::ShorterPathExists: return "ShorterPathExists";
    case ErrorCode::PathsNotDisjoint: return "PathsNotDisjoint";
    case ErrorCode::NotAugmenting: return "NotAugmenting";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::SmallDelta: return "SmallDelta";
    case ErrorCode::NotInCycle: return "NotInCycle";
    case ErrorCode::NotIndependentInput: return "NotIndependentInput";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; the code
/// identifies the violated precondition, the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace colocal
