#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vnum {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  RingMismatch,
  Overflow,
  ColonByZero,
  EmptyModule,       // the module under study is zero (e.g. R/B with B the unit ideal)
  InvalidSubquotient,
  NotAssociated,
  Unsupported,
  TooManyVariables,
};

const char* errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Overflow-checked 64-bit arithmetic. Exponents and degrees never wrap.
inline std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  }
  return out;
}

inline std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  }
  return out;
}

}  // namespace vnum
