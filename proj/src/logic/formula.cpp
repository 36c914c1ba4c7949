#include "hyperdox/logic/formula.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace hyperdox {

struct Formula::Node {
  Connective kind;
  PropVar var;
  AgentId agent;
  std::shared_ptr<const Node> first;
  std::shared_ptr<const Node> second;
  std::size_t size = 1;
  std::size_t depth = 0;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::atom(PropVar p) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::atom;
  n->var = p;
  n->hash = mix(mix(1, p.owner.index), p.index);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::negation;
  n->size = f.size() + 1;
  n->depth = f.modal_depth();
  n->hash = mix(2, f.hash());
  n->first = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::conjunction;
  n->size = lhs.size() + rhs.size() + 1;
  n->depth = std::max(lhs.modal_depth(), rhs.modal_depth());
  n->hash = mix(mix(3, lhs.hash()), rhs.hash());
  n->first = std::move(lhs.node_);
  n->second = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula Formula::belief(AgentId a, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::belief;
  n->agent = a;
  n->size = f.size() + 1;
  n->depth = f.modal_depth() + 1;
  n->hash = mix(mix(4, a.index), f.hash());
  n->first = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::knowledge(AgentId a, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::knowledge;
  n->agent = a;
  n->size = f.size() + 1;
  n->depth = f.modal_depth() + 1;
  n->hash = mix(mix(5, a.index), f.hash());
  n->first = std::move(f.node_);
  return Formula(std::move(n));
}

Connective Formula::kind() const { return node_->kind; }

PropVar Formula::var() const {
  assert(kind() == Connective::atom);
  return node_->var;
}

AgentId Formula::agent() const {
  assert(is_modal());
  return node_->agent;
}

Formula Formula::operand() const {
  assert(node_->first && !node_->second);
  return Formula(node_->first);
}

Formula Formula::left() const {
  assert(kind() == Connective::conjunction);
  return Formula(node_->first);
}

Formula Formula::right() const {
  assert(kind() == Connective::conjunction);
  return Formula(node_->second);
}

std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::modal_depth() const { return node_->depth; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.hash != b.hash || a.size != b.size || a.kind != b.kind) return false;
  switch (a.kind) {
    case Connective::atom:
      return a.var == b.var;
    case Connective::negation:
      return Formula(a.first) == Formula(b.first);
    case Connective::conjunction:
      return Formula(a.first) == Formula(b.first) && Formula(a.second) == Formula(b.second);
    case Connective::belief:
    case Connective::knowledge:
      return a.agent == b.agent && Formula(a.first) == Formula(b.first);
  }
  return false;
}

std::strong_ordering operator<=>(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return std::strong_ordering::equal;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (auto c = a.size <=> b.size; c != 0) return c;
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  switch (a.kind) {
    case Connective::atom:
      return a.var <=> b.var;
    case Connective::negation:
      return Formula(a.first) <=> Formula(b.first);
    case Connective::conjunction:
      if (auto c = Formula(a.first) <=> Formula(b.first); c != 0) return c;
      return Formula(a.second) <=> Formula(b.second);
    case Connective::belief:
    case Connective::knowledge:
      if (auto c = a.agent <=> b.agent; c != 0) return c;
      return Formula(a.first) <=> Formula(b.first);
  }
  return std::strong_ordering::equal;
}

Formula disjunction(Formula lhs, Formula rhs) {
  return Formula::negation(Formula::conjunction(Formula::negation(std::move(lhs)),
                                                Formula::negation(std::move(rhs))));
}

Formula implication(Formula lhs, Formula rhs) {
  return disjunction(Formula::negation(std::move(lhs)), std::move(rhs));
}

Formula biconditional(Formula lhs, Formula rhs) {
  return Formula::conjunction(implication(lhs, rhs), implication(rhs, lhs));
}

Formula falsum(PropVar p) {
  return Formula::conjunction(Formula::atom(p), Formula::negation(Formula::atom(p)));
}

Formula verum(PropVar p) { return Formula::negation(falsum(p)); }

std::optional<ImplicationParts> as_implication(const Formula& f) {
  // ~(~~x & ~y)
  if (f.kind() != Connective::negation) return std::nullopt;
  auto conj = f.operand();
  if (conj.kind() != Connective::conjunction) return std::nullopt;
  auto l = conj.left();
  auto r = conj.right();
  if (l.kind() != Connective::negation || r.kind() != Connective::negation) return std::nullopt;
  auto ll = l.operand();
  if (ll.kind() != Connective::negation) return std::nullopt;
  return ImplicationParts{ll.operand(), r.operand()};
}

}  // namespace hyperdox
