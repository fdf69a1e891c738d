#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutchoose {

enum class ErrorKind {
  OutOfRange,
  InvalidArgs,
  EmptyStrategySpace,
  InfeasibleConstruction,
  BreakpointAmbiguity,
  TooLarge,
  ParseError,
  EmptyFile,
  UnsupportedFormat,
};

std::string_view to_string(ErrorKind kind);

/// Domain failure raised by every module. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cutchoose
