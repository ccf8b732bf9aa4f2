#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace nedindex {

enum class ErrorCode {
  kInvalidVertex,
  kInvalidSize,
  kParseError,
  kInvalidAssignment,
  kOutOfRange,
  kInvalidPair,
  kInvalidConfig,
  kIo,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library. Parse errors carry the 1-based
/// line number of the offending input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace nedindex
