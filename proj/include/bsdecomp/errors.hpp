#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsdecomp {

enum class ErrorKind {
  LengthMismatch,
  EmptyColumn,
  NotADegreeSequence,
  NonPositiveDegree,
  NotInCone,
  UnsupportedCodimension,
  RequiresStrictDegrees,
  SizeExceeded,
  ParseError,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind);

// Domain error. `what()` carries the human-readable payload; `kind()` the
// stable name printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace bsdecomp
