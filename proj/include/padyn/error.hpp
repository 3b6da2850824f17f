#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padyn {

// Every failure the library can signal. The CLI prints name() verbatim, so
// the spelling of each enumerator is part of the machine-readable interface.
enum class ErrorCode {
  PrecisionExhausted,
  NonUnitInverse,
  ZeroArgument,
  OutOfDomain,
  NonIntegralCoefficient,
  InvalidRadii,
  DivisionByZero,
  SingularCurve,
  InsufficientOrder,
  PrimeTooLarge,
  BadReductionRequired,
  NoCommonBadPrime,
  NotSemistable,
  DegenerateCombination,
  SizeMismatch,
  ZeroSum,
  DomainError,
  EndpointSingular,
  NoAdmissiblePath,
  NegativeValuation,
  IoFailure,
  DegenerateConfiguration,
  ParseError,
  NonRectangularGrid,
  SeedOutOfDomain,
  EmptyInput,
  UsageError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace padyn
