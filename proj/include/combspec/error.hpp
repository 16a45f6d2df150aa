#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace combspec {

enum class ErrorCode {
  invalid_argument,
  parse,
  precondition,
  size_guard,
  not_divisible,
  timeout,
  internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a distinct exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace combspec
