#include "padyn/error.hpp"

namespace padyn {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NonUnitInverse: return "NonUnitInverse";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::InvalidRadii: return "InvalidRadii";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::InsufficientOrder: return "InsufficientOrder";
    case ErrorCode::PrimeTooLarge: return "PrimeTooLarge";
    case ErrorCode::BadReductionRequired: return "BadReductionRequired";
    case ErrorCode::NoCommonBadPrime: return "NoCommonBadPrime";
    case ErrorCode::NotSemistable: return "NotSemistable";
    case ErrorCode::DegenerateCombination: return "DegenerateCombination";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ZeroSum: return "ZeroSum";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EndpointSingular: return "EndpointSingular";
    case ErrorCode::NoAdmissiblePath: return "NoAdmissiblePath";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonRectangularGrid: return "NonRectangularGrid";
    case ErrorCode::SeedOutOfDomain: return "SeedOutOfDomain";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace padyn
