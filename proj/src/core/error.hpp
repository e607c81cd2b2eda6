#pragma once

#include <stdexcept>
#include <string>

namespace beurling {

enum class ErrorCode {
  kDomain = 1,
  kInvalidArgument = 2,
  kConvergence = 3,
  kCertification = 4,
  kTolerance = 5,
  kIo = 6,
  kRange = 7,
  kInternal = 99,
};

const char* ErrorCodeName(ErrorCode code);

// Every failure raised by the core carries one of the codes above; the C API
// maps them one-to-one onto bl_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) Fail(code, what);
}

}  // namespace beurling
