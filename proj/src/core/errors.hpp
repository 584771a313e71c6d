#pragma once

#include <stdexcept>
#include <string>

namespace rdmkit {

enum class ErrorCode {
  NotHermitian,
  BadArity,
  DimensionOverflow,
  DegenerateState,
  NotInvertible,
  NormBoundViolated,
  Io,
  InvalidArgument,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "not_hermitian";
    case ErrorCode::BadArity: return "bad_arity";
    case ErrorCode::DimensionOverflow: return "dimension_overflow";
    case ErrorCode::DegenerateState: return "degenerate_state";
    case ErrorCode::NotInvertible: return "not_invertible";
    case ErrorCode::NormBoundViolated: return "norm_bound_violated";
    case ErrorCode::Io: return "io";
    case ErrorCode::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rdmkit
