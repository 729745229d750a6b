#pragma once

#include <stdexcept>
#include <string>

namespace hookpoly {

enum class ErrorCode {
  Parse,
  InvalidArgument,
  BoundExceeded,
  UnknownIdentity,
  UnknownFormat,
  Internal,
};

// Single exception type for the core. The C API maps `code()` onto its
// status enum; nothing else inspects the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hookpoly
