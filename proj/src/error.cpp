#include "hyperdox/error.hpp"

namespace hyperdox {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::undeclared_atom: return "undeclared_atom";
    case ErrorKind::undeclared_agent: return "undeclared_agent";
    case ErrorKind::workspace: return "workspace";
    case ErrorKind::validation: return "validation";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::fragment: return "fragment";
    case ErrorKind::limit: return "limit";
    case ErrorKind::input: return "input";
  }
  return "unknown";
}

}  // namespace hyperdox
