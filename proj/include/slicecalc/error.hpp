#pragma once

#include <stdexcept>
#include <string>

namespace slicecalc {

enum class ErrorCode {
  ModeMismatch,
  KindMismatch,
  WrongKind,
  DivisionByZero,
  InvalidUnit,
  InvalidBase,
  NotOnSlice,
  OutsideDomain,
  BranchUndefined,
  InexactValue,
  UnsupportedNode,
  ZeroResultant,
  DegreeCapExceeded,
  NormalIdenticallyZero,
  ZeroPolynomial,
  QIdenticallyZeroAtZero,
  NonRationalComponent,
  VerificationFailure,
  EssentialDetected,
  NotSliceRegular,
  ParseError,
  StemnessViolation,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every library failure is reported through this type; `code()` is machine readable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures carry the byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::ParseError, "at byte " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace slicecalc
