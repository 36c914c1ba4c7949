#pragma once

#include <string>
#include <string_view>

#include "hyperdox/logic/formula.hpp"

namespace hyperdox {

/// Parses the formula grammar, desugaring `|`, `->`, `<->`, `true` and
/// `false` into core constructors.
///
///   form  ::= iff
///   iff   ::= imp ("<->" iff)?
///   imp   ::= or ("->" imp)?
///   or    ::= and ("|" and)*
///   and   ::= unary ("&" unary)*
///   unary ::= "~" unary | "B{" agent "}" unary | "K{" agent "}" unary
///           | atom | "true" | "false" | "(" form ")"
///
/// Throws ParseError (kind syntax, undeclared_atom or undeclared_agent).
Formula parse_formula(std::string_view text, const Workspace& ws);

/// Canonical text for `f`; parentheses only where precedence demands them.
std::string render_formula(const Formula& f, const Workspace& ws);

}  // namespace hyperdox
