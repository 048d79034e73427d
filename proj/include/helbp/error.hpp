#pragma once

#include <stdexcept>
#include <string>

namespace helbp {

// Every failure mode raised by the library. The C API maps these one-to-one
// onto helbp_status values.
enum class ErrorCode {
  InvalidArgument = 1,
  InvalidOrder,
  PoleInBottomParameter,
  DivisionByZeroConstantTerm,
  DivisionByZero,
  ModulusOutOfRange,
  ArgumentOutOfRange,
  AngleOutOfRange,
  DivergentModulus,
  DegenerateFamily,
  ZeroAtOrigin,
  NotAnLbp,
  CoefficientOutOfRange,
  ZeroAtTransformPoint,
  MomentMapSingular,
  DegeneratePhiRatio,
  ChiEqualsD0,
  DegenerateTransformedFamily,
  NotPalindromic,
  SingularDenominator,
  DomainError,
  ZeroDenominator,
  GridTooCoarse,
  ParseError,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace helbp
