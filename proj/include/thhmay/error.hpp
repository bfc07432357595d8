#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thhmay {

enum class ErrorKind {
  Validation,
  NotASubspace,
  OddDegreeTruncation,
  FieldMismatch,
  DegreeMismatch,
  CutoffMismatch,
  CutoffTooSmall,
  IdentityViolation,
  InvalidParams,
  UnboundedFiltration,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries the kind so callers (and the
// CLI exit-code logic) can tell validation problems from internal ones.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace thhmay
