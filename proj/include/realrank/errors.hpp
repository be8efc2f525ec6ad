#pragma once

#include <stdexcept>
#include <string>

namespace realrank {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  ShapeMismatch,
  ArityTooSmall,
  InvalidModes,
  InvalidSelector,
  NotDivisible,
  Inconsistent,
  NotRankTwo,
  IllConditioned,
  ZeroTensor,
  DegreeTooSmall,
  BadShape,
  NonIntegral,
  DegenerateQuery,
  ResultantIdenticallyZero,
  RewriteFailed,
  IndexOutOfRange,
  DimensionMismatch,
  WrongDegree,
  InvalidCurve,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace realrank
