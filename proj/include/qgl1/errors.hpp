#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qgl1 {

/// Library error carrying a stable machine-readable code ("MTooLarge",
/// "NotInSpan", "PreconditionViolated", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace qgl1
