#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>

#include "hyperdox/logic/workspace.hpp"

namespace hyperdox {

enum class Connective { atom, negation, conjunction, belief, knowledge };

/// Immutable formula of the epistemic-doxastic language, built from the five
/// core constructors only. Copies share structure; safe to pass between threads.
class Formula {
 public:
  static Formula atom(PropVar p);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula belief(AgentId a, Formula f);
  static Formula knowledge(AgentId a, Formula f);

  Connective kind() const;
  bool is_modal() const {
    return kind() == Connective::belief || kind() == Connective::knowledge;
  }

  // Valid for atom only.
  PropVar var() const;
  // Valid for belief/knowledge only.
  AgentId agent() const;
  // Operand of negation/belief/knowledge.
  Formula operand() const;
  // Operands of conjunction.
  Formula left() const;
  Formula right() const;

  /// Number of constructor nodes.
  std::size_t size() const;
  /// Maximum nesting of belief/knowledge nodes.
  std::size_t modal_depth() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& x, const Formula& y);
  friend std::strong_ordering operator<=>(const Formula& x, const Formula& y);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Derived connectives, expanded into core constructors.
Formula disjunction(Formula lhs, Formula rhs);   // ~(~lhs & ~rhs)
Formula implication(Formula lhs, Formula rhs);   // ~lhs | rhs
Formula biconditional(Formula lhs, Formula rhs); // (lhs -> rhs) & (rhs -> lhs)
Formula falsum(PropVar p);                       // p & ~p
Formula verum(PropVar p);                        // ~(p & ~p)

/// Inverse of `implication`: the antecedent and consequent if `f` has its shape.
struct ImplicationParts {
  Formula antecedent;
  Formula consequent;
};
std::optional<ImplicationParts> as_implication(const Formula& f);

}  // namespace hyperdox

template <>
struct std::hash<hyperdox::Formula> {
  std::size_t operator()(const hyperdox::Formula& f) const noexcept { return f.hash(); }
};
