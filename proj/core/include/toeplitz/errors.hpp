#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toeplitz {

enum class ErrorCode {
  ZeroPolynomial,
  ZeroSum,
  DivisionByZeroPolynomial,
  BothZero,
  ZeroDenominator,
  ZeroNumerator,
  NotRatT,
  NotProper,
  DegreeTooLarge,
  LambdaNotInDisk,
  PolesInClosedDisk,
  NonRealCoefficients,
  NotCoprime,
  DenominatorVanishesAtZero,
  CircleRootDetected,
  InexactFactorization,
  ParseError,
  IdentityFailure,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

// Exceptions that mean an exact identity failed inside the library rather
// than a caller supplying bad input.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected);
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void ensure(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace toeplitz
