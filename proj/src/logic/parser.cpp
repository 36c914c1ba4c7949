#include "hyperdox/logic/parser.hpp"

#include <cctype>

#include "hyperdox/error.hpp"

namespace hyperdox {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Workspace& ws) : text_(text), ws_(ws) {}

  Formula parse() {
    auto f = parse_iff();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what, ErrorKind kind = ErrorKind::syntax) const {
    throw ParseError(kind, pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string_view identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  PropVar bottom() const {
    auto p = ws_.bottom_atom();
    if (!p) fail("workspace declares no designated atom for true/false", ErrorKind::workspace);
    return *p;
  }

  Formula parse_iff() {
    auto lhs = parse_imp();
    if (accept("<->")) return biconditional(lhs, parse_iff());
    return lhs;
  }

  Formula parse_imp() {
    auto lhs = parse_or();
    if (accept("->")) return implication(lhs, parse_imp());
    return lhs;
  }

  Formula parse_or() {
    auto lhs = parse_and();
    while (accept("|")) lhs = disjunction(lhs, parse_and());
    return lhs;
  }

  Formula parse_and() {
    auto lhs = parse_unary();
    while (accept("&")) lhs = Formula::conjunction(lhs, parse_unary());
    return lhs;
  }

  AgentId parse_agent() {
    std::size_t start = (skip_space(), pos_);
    auto name = identifier();
    if (name.empty()) fail("expected agent name");
    auto a = ws_.find_agent(name);
    if (!a) throw ParseError(ErrorKind::undeclared_agent, start, "undeclared agent '" + std::string(name) + "'");
    expect("}");
    return *a;
  }

  Formula parse_unary() {
    skip_space();
    if (accept("~")) return Formula::negation(parse_unary());
    if (accept("(")) {
      auto f = parse_iff();
      expect(")");
      return f;
    }
    if (accept("B{")) {
      auto a = parse_agent();
      return Formula::belief(a, parse_unary());
    }
    if (accept("K{")) {
      auto a = parse_agent();
      return Formula::knowledge(a, parse_unary());
    }
    std::size_t start = pos_;
    auto name = identifier();
    if (name.empty()) {
      if (pos_ == text_.size()) fail("unexpected end of input");
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    if (name == "true") return verum(bottom());
    if (name == "false") return falsum(bottom());
    auto p = ws_.find_var(name);
    if (!p) throw ParseError(ErrorKind::undeclared_atom, start, "undeclared atom '" + std::string(name) + "'");
    return Formula::atom(*p);
  }

  std::string_view text_;
  const Workspace& ws_;
  std::size_t pos_ = 0;
};

void render(const Formula& f, const Workspace& ws, std::string& out);

// Operand of a prefix operator: only a conjunction needs parentheses.
void render_prefixed(const Formula& f, const Workspace& ws, std::string& out) {
  if (f.kind() == Connective::conjunction) {
    out += '(';
    render(f, ws, out);
    out += ')';
  } else {
    render(f, ws, out);
  }
}

void render(const Formula& f, const Workspace& ws, std::string& out) {
  switch (f.kind()) {
    case Connective::atom:
      out += ws.var_name(f.var());
      return;
    case Connective::negation:
      out += '~';
      render_prefixed(f.operand(), ws, out);
      return;
    case Connective::belief:
    case Connective::knowledge:
      out += f.kind() == Connective::belief ? "B{" : "K{";
      out += ws.agent_name(f.agent());
      out += "} ";
      render_prefixed(f.operand(), ws, out);
      return;
    case Connective::conjunction:
      // '&' is left-associative: a conjunction on the right needs parentheses.
      render(f.left(), ws, out);
      out += " & ";
      render_prefixed(f.right(), ws, out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text, const Workspace& ws) {
  return Parser(text, ws).parse();
}

std::string render_formula(const Formula& f, const Workspace& ws) {
  std::string out;
  render(f, ws, out);
  return out;
}

}  // namespace hyperdox
