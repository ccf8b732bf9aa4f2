#include "nedindex/error.hpp"

namespace nedindex {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidVertex: return "invalid-vertex";
    case ErrorCode::kInvalidSize: return "invalid-size";
    case ErrorCode::kParseError: return "parse-error";
    case ErrorCode::kInvalidAssignment: return "invalid-assignment";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kInvalidPair: return "invalid-pair";
    case ErrorCode::kInvalidConfig: return "invalid-config";
    case ErrorCode::kIo: return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + message
                              : message),
      code_(code),
      line_(line) {}

}  // namespace nedindex
