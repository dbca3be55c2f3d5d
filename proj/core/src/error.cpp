#include "drinfeld/error.hpp"

namespace drinfeld {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::IncompatibleDegrees: return "IncompatibleDegrees";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InverseOfZero: return "InverseOfZero";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::ConstantImage: return "ConstantImage";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorCode::TorsionNotSplit: return "TorsionNotSplit";
    case ErrorCode::ZeroValuation: return "ZeroValuation";
    case ErrorCode::QuotientTooLarge: return "QuotientTooLarge";
    case ErrorCode::RootFound: return "RootFound";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace drinfeld
