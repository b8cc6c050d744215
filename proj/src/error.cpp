#include "pdq/error.hpp"

namespace pdq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedCyclotomicOrder: return "UnsupportedCyclotomicOrder";
    case ErrorCode::PoleAtSpecialization: return "PoleAtSpecialization";
    case ErrorCode::NotHomogeneousDegree3: return "NotHomogeneousDegree3";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::SingularRelationSystem: return "SingularRelationSystem";
    case ErrorCode::SingularDegreeSystem: return "SingularDegreeSystem";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::PbwViolation: return "PbwViolation";
    case ErrorCode::ClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorCode::InfiniteOrder: return "InfiniteOrder";
    case ErrorCode::NotDivisibleByHbar: return "NotDivisibleByHbar";
    case ErrorCode::NotExpressible: return "NotExpressible";
    case ErrorCode::UnknownCase: return "UnknownCase";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::JacobiFailure: return "JacobiFailure";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::TooManyParameters: return "TooManyParameters";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
  }
  return "Unknown";
}

}  // namespace pdq
