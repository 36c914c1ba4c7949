#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperdox {

enum class ErrorKind {
  syntax,
  undeclared_atom,
  undeclared_agent,
  workspace,
  validation,
  precondition,
  fragment,
  limit,
  input,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error the library reports. The kind is stable and
/// machine-readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Formula text rejected by the parser. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& message)
      : Error(kind, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hyperdox
