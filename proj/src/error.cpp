#include "brace/error.hpp"

namespace brace {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::IdentityNotZero: return "IdentityNotZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotABrace: return "NotABrace";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotALeftIdeal: return "NotALeftIdeal";
    case ErrorCode::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::InvalidActionPair: return "InvalidActionPair";
    case ErrorCode::NotGoodPair: return "NotGoodPair";
    case ErrorCode::IncompatiblePair: return "IncompatiblePair";
    case ErrorCode::NotInFixedSubgroup: return "NotInFixedSubgroup";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotInC2N: return "NotInC2N";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::IdealNotTrivialBrace: return "IdealNotTrivialBrace";
    case ErrorCode::MismatchedEnds: return "MismatchedEnds";
    case ErrorCode::NotAutomorphisms: return "NotAutomorphisms";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::DoesNotNormalizeIdeal: return "DoesNotNormalizeIdeal";
    case ErrorCode::NotAdditivelySplit: return "NotAdditivelySplit";
    case ErrorCode::SylowNotPreserved: return "SylowNotPreserved";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CrossReferenceError: return "CrossReferenceError";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

}  // namespace brace
