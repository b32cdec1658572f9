#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maninlab {

enum class ErrorKind {
  invalid_argument,
  incompatible,
  budget_exceeded,
  parse_error,
  not_found,
  unsupported,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every rejection in the library is an Error; the CLI turns kind() + what()
// into its JSON error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace maninlab
