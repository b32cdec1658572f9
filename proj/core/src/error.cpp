#include "maninlab/error.hpp"

namespace maninlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::incompatible: return "incompatible";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
    case ErrorKind::parse_error: return "parse_error";
    case ErrorKind::not_found: return "not_found";
    case ErrorKind::unsupported: return "unsupported";
  }
  return "unknown";
}

}  // namespace maninlab
