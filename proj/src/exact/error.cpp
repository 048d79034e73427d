#include "helbp/error.hpp"

namespace helbp {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::PoleInBottomParameter: return "PoleInBottomParameter";
    case ErrorCode::DivisionByZeroConstantTerm: return "DivisionByZeroConstantTerm";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ModulusOutOfRange: return "ModulusOutOfRange";
    case ErrorCode::ArgumentOutOfRange: return "ArgumentOutOfRange";
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::DivergentModulus: return "DivergentModulus";
    case ErrorCode::DegenerateFamily: return "DegenerateFamily";
    case ErrorCode::ZeroAtOrigin: return "ZeroAtOrigin";
    case ErrorCode::NotAnLbp: return "NotAnLbp";
    case ErrorCode::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorCode::ZeroAtTransformPoint: return "ZeroAtTransformPoint";
    case ErrorCode::MomentMapSingular: return "MomentMapSingular";
    case ErrorCode::DegeneratePhiRatio: return "DegeneratePhiRatio";
    case ErrorCode::ChiEqualsD0: return "ChiEqualsD0";
    case ErrorCode::DegenerateTransformedFamily: return "DegenerateTransformedFamily";
    case ErrorCode::NotPalindromic: return "NotPalindromic";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace helbp
