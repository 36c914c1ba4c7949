#pragma once

#include <cstddef>
#include <vector>

#include "hyperdox/hypergraph/model.hpp"
#include "hyperdox/kripke/relation.hpp"
#include "hyperdox/logic/formula.hpp"

namespace hyperdox {

enum class AccessKind { doxastic, epistemic };

/// e1 →B_a e2 iff the a-vertex of e1 lies in T(e2);
/// e1 →K_a e2 iff e1 and e2 share their a-vertex.
Relation accessibility(const HypergraphModel& m, AgentId a, AccessKind kind);

/// Evaluates formulas at edges. All accessibility relations are built on
/// construction, after which the evaluator is read-only and may be shared
/// between threads.
class HypergraphEvaluator {
 public:
  explicit HypergraphEvaluator(const HypergraphModel& m);

  const HypergraphModel& model() const { return m_; }
  const Relation& relation(AgentId a, AccessKind kind) const;

  /// Truth value of `f` at every edge.
  std::vector<char> truth_set(const Formula& f) const;
  bool satisfies(std::size_t e, const Formula& f) const;
  /// True iff `f` holds at every edge.
  bool valid(const Formula& f) const;

 private:
  const HypergraphModel& m_;
  std::vector<Relation> doxastic_;
  std::vector<Relation> epistemic_;
};

bool satisfies_h(const HypergraphModel& m, std::size_t e, const Formula& f);

}  // namespace hyperdox
