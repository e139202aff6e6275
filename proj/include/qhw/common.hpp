#pragma once

#include <stdexcept>
#include <string>

namespace qw {

// Domain error with a stable machine-readable code ("NonAdmissible",
// "InfiniteDimensional", ...) in addition to the human message.  The CLI maps
// ParseError to exit code 2 and every other code to exit code 1.
class QwError : public std::runtime_error {
public:
  QwError(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw QwError(code, message);
}

inline void require(bool cond, const std::string& code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace qw
