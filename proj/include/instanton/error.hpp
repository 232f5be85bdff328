#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace instanton {

/// Machine-readable failure categories. The CLI maps these onto exit codes
/// and the structured error object of a report.
enum class ErrorCode {
  InvalidArgument,
  DivisionByZero,
  NonInvertibleDenominator,
  PoleAtExpansionPoint,
  InvalidBrieskornData,
  NonFreeAction,
  InvalidSeifertPair,
  NotInstantonEnergy,
  InconsistentInvariants,
  LevelNotCoprime,
  NotIsolatedFixedPoint,
  SingularTerm,
  RhoTableIncomplete,
  DegenerateRotationPair,
  SphereFixedFiberwise,
  LiftWeightsRequired,
  HypothesesViolated,
  SearchOverBudget,
  ReconstructionFailed,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string input = {})
      : std::runtime_error(message), code_(code), input_(std::move(input)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& input() const noexcept { return input_; }

 private:
  ErrorCode code_;
  std::string input_;
};

}  // namespace instanton
