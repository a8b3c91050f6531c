#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace renlab {

/// Domain error with a stable machine-readable code (e.g. "NotNormalized",
/// "PeriodicWalk"). The what() string is "[Code] human message".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error("[" + code + "] " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace renlab
