#include "slicecalc/error.hpp"

namespace slicecalc {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidUnit: return "InvalidUnit";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::NotOnSlice: return "NotOnSlice";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::BranchUndefined: return "BranchUndefined";
    case ErrorCode::InexactValue: return "InexactValue";
    case ErrorCode::UnsupportedNode: return "UnsupportedNode";
    case ErrorCode::ZeroResultant: return "ZeroResultant";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NormalIdenticallyZero: return "NormalIdenticallyZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::QIdenticallyZeroAtZero: return "QIdenticallyZeroAtZero";
    case ErrorCode::NonRationalComponent: return "NonRationalComponent";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::EssentialDetected: return "EssentialDetected";
    case ErrorCode::NotSliceRegular: return "NotSliceRegular";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::StemnessViolation: return "StemnessViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace slicecalc
