#include "ostrowski/error.hpp"

namespace ostrowski {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedRadicand: return "MixedRadicand";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::RationalInput: return "RationalInput";
    case ErrorCode::InvalidDigits: return "InvalidDigits";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::IncomparableSystems: return "IncomparableSystems";
    case ErrorCode::ApproximateResult: return "ApproximateResult";
    case ErrorCode::PredecessorOfZero: return "PredecessorOfZero";
    case ErrorCode::NotAnInteger: return "NotAnInteger";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::UnsupportedSystem: return "UnsupportedSystem";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ostrowski
