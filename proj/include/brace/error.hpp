#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brace {

enum class ErrorCode {
  // algebra
  NotAGroup,
  NotAbelian,
  IdentityNotZero,
  DimensionMismatch,
  // braces
  NotABrace,
  IndexOutOfRange,
  OrderTooLarge,
  NotAnIdeal,
  NotALeftIdeal,
  PrimeDoesNotDivideOrder,
  NotAnAutomorphism,
  // actions
  InvalidActionPair,
  NotGoodPair,
  IncompatiblePair,
  // cochains
  NotInFixedSubgroup,
  NotNormalized,
  NotInC2N,
  NotACocycle,
  // extensions
  IdealNotTrivialBrace,
  MismatchedEnds,
  // wells
  NotAutomorphisms,
  NotCompatible,
  DoesNotNormalizeIdeal,
  NotAdditivelySplit,
  SylowNotPreserved,
  // io / cli
  ParseError,
  CrossReferenceError,
  OracleMismatch,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace brace
