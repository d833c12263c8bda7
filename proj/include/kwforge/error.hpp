#ifndef KWFORGE_ERROR_HPP
#define KWFORGE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kwforge {

using Integer = std::int64_t;

enum class ErrorCode {
  Domain,
  OrderViolation,
  OutOfWindow,
  NoRepresentation,
  Degenerate,
  DegenerateMinor,
  WitnessMismatch,
  ArityMismatch,
  NotHomogeneous,
  NotApplicable,
  Overflow,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` carries the machine-readable cause.
class KwError : public std::runtime_error {
public:
  KwError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw KwError(code, what);
}

inline Integer checked_add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out)) raise(ErrorCode::Overflow, "integer addition overflow");
  return out;
}

inline Integer checked_sub(Integer a, Integer b) {
  Integer out;
  if (__builtin_sub_overflow(a, b, &out)) raise(ErrorCode::Overflow, "integer subtraction overflow");
  return out;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out)) raise(ErrorCode::Overflow, "integer multiplication overflow");
  return out;
}

/// Binomial coefficient with overflow detection.
Integer binomial(Integer n, Integer k);

}  // namespace kwforge

#endif  // KWFORGE_ERROR_HPP
