#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ambipref {

enum class ErrorCode {
  MalformedDocument,
  MalformedRational,
  EmptyStateSpace,
  TooFewPrizes,
  DuplicateLabel,
  UnknownLabel,
  NonSimplexPrior,
  NonSimplexLottery,
  ConstantUtility,
  EmptyCollection,
  EmptyBeliefSet,
  DuplicateVertex,
  DimensionMismatch,
  AlphaOutOfRange,
  UnknownBeliefSetName,
  UnknownModel,
  UnknownAct,
  UnknownAxiom,
  RadiusExceedsUtilityRange,
  BatteryMissingConstants,
  EmptyBattery,
  WrongDimension,
  DegenerateDirection,
  TooFewSamples,
  UnknownFormat,
  ParamsOutOfRange,
  UnknownSuite,
  InstanceTooLarge,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One invariant violation found while validating an instance document.
/// `path` is a JSON-pointer-like location, e.g. "/belief_collection/0/vertices/1".
struct Issue {
  ErrorCode code;
  std::string path;
  std::string message;
};

/// Thrown by instance validation; carries every violation found, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Issue> issues);

  const std::vector<Issue>& issues() const noexcept { return issues_; }

 private:
  std::vector<Issue> issues_;
};

}  // namespace ambipref
