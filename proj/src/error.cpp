#include "permclass/error.hpp"

namespace permclass {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kNotInClass: return "NOT_IN_CLASS";
    case ErrorCode::kForbiddenFactor: return "FORBIDDEN_FACTOR";
    case ErrorCode::kBadTerminator: return "BAD_TERMINATOR";
    case ErrorCode::kBadLetter: return "BAD_LETTER";
    case ErrorCode::kHeightViolation: return "HEIGHT_VIOLATION";
    case ErrorCode::kBadEndpoint: return "BAD_ENDPOINT";
    case ErrorCode::kBadColor: return "BAD_COLOR";
    case ErrorCode::kMalformedSegment: return "MALFORMED_SEGMENT";
    case ErrorCode::kNonunitConstant: return "NONUNIT_CONSTANT";
    case ErrorCode::kCapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

static std::string decorate(ErrorCode code, const std::string& message,
                            std::optional<std::size_t> position) {
  std::string out(error_code_name(code));
  if (position) out += " at position " + std::to_string(*position);
  out += ": " + message;
  return out;
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(decorate(code, message, position)),
      code_(code),
      position_(position) {}

}  // namespace permclass
