#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pdq {

enum class ErrorCode {
  DivisionByZero,
  UnsupportedCyclotomicOrder,
  PoleAtSpecialization,
  NotHomogeneousDegree3,
  NotQuadratic,
  SingularRelationSystem,
  SingularDegreeSystem,
  DegreeCapExceeded,
  PbwViolation,
  ClosureExceedsCap,
  InfiniteOrder,
  NotDivisibleByHbar,
  NotExpressible,
  UnknownCase,
  SyntaxError,
  AlphabetMismatch,
  JacobiFailure,
  SchemaError,
  TooManyParameters,
  ExponentOverflow,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace pdq
