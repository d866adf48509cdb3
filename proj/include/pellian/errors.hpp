#pragma once

#include <stdexcept>
#include <string>

namespace pellian {

// Process exit codes used by the command-line tool.
enum class ErrorKind : int {
  invalid_input = 2,
  precision_exhausted = 3,
  invariant_violation = 4,
};

// Base of every error raised by the library. `reason` is a short
// machine-readable token (e.g. "square_radicand"); what() is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string reason, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& reason() const noexcept { return reason_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
  std::string reason_;
};

class InvalidInput : public Error {
 public:
  InvalidInput(std::string reason, const std::string& message)
      : Error(ErrorKind::invalid_input, std::move(reason), message) {}
};

// An interval could not be narrowed enough before the precision ceiling.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(std::string reason, const std::string& message)
      : Error(ErrorKind::precision_exhausted, std::move(reason), message) {}
};

// A proven inequality or exact identity failed; always a bug.
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string reason, const std::string& message)
      : Error(ErrorKind::invariant_violation, std::move(reason), message) {}
};

}  // namespace pellian
