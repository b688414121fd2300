#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace permclass {

enum class ErrorCode {
  kParse,
  kNotInClass,
  kForbiddenFactor,
  kBadTerminator,
  kBadLetter,
  kHeightViolation,
  kBadEndpoint,
  kBadColor,
  kMalformedSegment,
  kNonunitConstant,
  kCapExceeded,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Every failure in the library is reported through this exception. `position`
// is the 0-based offset of the offending element (letter, step, token) when
// one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace permclass
