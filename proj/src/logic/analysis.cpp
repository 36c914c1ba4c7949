#include "hyperdox/logic/analysis.hpp"

namespace hyperdox {

namespace {

bool has_knowledge(const Formula& f) {
  switch (f.kind()) {
    case Connective::atom: return false;
    case Connective::knowledge: return true;
    case Connective::conjunction: return has_knowledge(f.left()) || has_knowledge(f.right());
    default: return has_knowledge(f.operand());
  }
}

PropVar some_atom(const Formula& f) {
  switch (f.kind()) {
    case Connective::atom: return f.var();
    case Connective::conjunction: return some_atom(f.left());
    default: return some_atom(f.operand());
  }
}

}  // namespace

bool is_agent_formula(const Formula& f, AgentId a) {
  switch (f.kind()) {
    case Connective::atom: return f.var().owner == a;
    case Connective::negation: return is_agent_formula(f.operand(), a);
    case Connective::conjunction: return is_agent_formula(f.left(), a) && is_agent_formula(f.right(), a);
    case Connective::belief:
    case Connective::knowledge: return f.agent() == a && is_agent_formula(f.operand(), a);
  }
  return false;
}

FragmentInfo fragment_check(const Formula& f) {
  FragmentInfo info;
  info.in_doxastic_fragment = !has_knowledge(f);
  // Every formula has an atom, so only that atom's owner can qualify.
  AgentId candidate = some_atom(f).owner;
  if (is_agent_formula(f, candidate)) info.agent_formula_for.push_back(candidate);
  return info;
}

std::size_t modal_depth(const Formula& f) { return f.modal_depth(); }

}  // namespace hyperdox
