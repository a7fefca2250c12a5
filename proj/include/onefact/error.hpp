#pragma once

#include <stdexcept>
#include <string>

namespace onefact {

enum class ErrorCode {
  InvalidArgument,
  NotAMatching,
  WrongSize,
  VertexOutOfRange,
  OddOrder,
  EvenOrder,
  NotAPermutation,
  NotCrossOnly,
  PreconditionFailed,
  StabilizerNotTrivial,
  ProfileSumInvalid,
  Infeasible,
  NoneFound,
  OrderingFailed,
  OutOfDomain,
  NoFamily,
  StarterSearchFailed,
  STooSmall,
  NotPrime,
  EvenP,
  DivisionByZero,
  InvalidInput,
  HypothesesUnmet,
  ParseError,
  FixtureError,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace onefact
