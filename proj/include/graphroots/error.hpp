#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphroots {

enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kCapExceeded,
  kPatternMismatch,
  kNotARoot,
  kNoValidSplitting,
  kTooLarge,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the text readers. `line` and `column` are 1-based; column 0 means
// the whole line is at fault.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

}  // namespace graphroots
