#pragma once

#include <stdexcept>
#include <string>

namespace ips {

enum class ErrorKind {
  InvalidArgument,
  OutOfRange,
  DivisionByZero,
  RadicandMismatch,
  Degenerate,
  Uncertified,
  Inconsistent,
  NotApplicable,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Error raised by every library operation; `kind()` lets callers branch
/// without parsing the message.
class IpsError : public std::runtime_error {
 public:
  IpsError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ips
