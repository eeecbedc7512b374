#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sat3ce {

enum class ErrorCode {
  MalformedHeader,
  MalformedBody,
  ClauseCountMismatch,
  VariableOutOfRange,
  NotThreeSat,
  LengthMismatch,
  InvalidSize,
  NoSolution,
  InvalidRange,
  InvalidSolution,
  IndexOutOfRange,
  TooLarge,
  MissingTarget,
  InvalidArgument,
  IoError,
};

/// Stable snake_case name, used in `error: <code>: <message>` lines.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace sat3ce
