#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drinfeld {

enum class ErrorCode {
  NotPrimePower,
  ReducibleModulus,
  ZeroInverse,
  ContextMismatch,
  NotADivisor,
  IncompatibleDegrees,
  DivisionByZero,
  InverseOfZero,
  PrecisionExhausted,
  ZeroLeadingCoefficient,
  ConstantImage,
  BadReduction,
  NoSolution,
  NonUniqueSolution,
  TorsionNotSplit,
  ZeroValuation,
  QuotientTooLarge,
  RootFound,
  IoError,
  InvalidArgument,
  Unsupported,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace drinfeld
