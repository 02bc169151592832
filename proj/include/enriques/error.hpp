/* Apache License, Version 2.0 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace enriques {

enum class ErrorCode {
  InvalidArgument,
  ModelMismatch,
  Unsupported,
  UnsupportedGenerator,
  Parse,
  OutOfTheorem,
  Overflow,
  InvariantViolation,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/* Parse failure carrying the byte offset of the offending token. */
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string &what)
      : Error(ErrorCode::Parse, what + " at byte " + std::to_string(offset)), offset_(offset)
  {
  }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  }
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  }
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  }
  return r;
}

}  // namespace checked
}  // namespace enriques
