#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starfree {

enum class ErrorCode {
  kInput,         // malformed or inconsistent caller input
  kOverflow,      // exact arithmetic left the 64-bit range
  kResource,      // instance exceeds a configured size limit
  kPrecondition,  // documented precondition of an operation does not hold
  kCascade,       // collapse of neighbouring color classes failed
  kInternal,      // an impossible state was reached
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace starfree
