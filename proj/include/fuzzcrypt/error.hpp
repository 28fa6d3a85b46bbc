#pragma once

#include <stdexcept>
#include <string>

namespace fuzzcrypt {

enum class ErrorCode {
  invalid_parameter,
  empty_input,
  dimension_mismatch,
  not_a_letter,
  invalid_selection,
  validation,
  io,
  encoding,
  wrong_key,
  corrupt_document,
};

/// Exception carrying a machine-checkable error class next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

/// Process exit status for an error class.  Parameter, dimension, selection
/// and config problems share the validation code; io, wrong-key, corrupt
/// document and encoding each get their own.
inline int exit_code(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::io:
      return 3;
    case ErrorCode::wrong_key:
      return 4;
    case ErrorCode::corrupt_document:
      return 5;
    case ErrorCode::encoding:
      return 6;
    default:
      return 2;
  }
}

}  // namespace fuzzcrypt
