#include "starfree/errors.hpp"

namespace starfree {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInput: return "input";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kResource: return "resource";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kCascade: return "cascade";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace starfree
