#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperdox/kripke/model.hpp"
#include "hyperdox/logic/formula.hpp"

namespace hyperdox {

/// One evaluation session over a Kripke model. The generated equivalence of
/// each agent is computed on first use and memoized for the session.
class KripkeEvaluator {
 public:
  explicit KripkeEvaluator(const KripkeModel& m);

  bool satisfies(std::size_t w, const Formula& f);
  /// Truth value of `f` at every world.
  std::vector<char> truth_set(const Formula& f);
  /// True iff `f` holds at every world.
  bool valid(const Formula& f);

 private:
  const std::vector<std::size_t>& classes(AgentId a);

  const KripkeModel& m_;
  std::vector<std::optional<std::vector<std::size_t>>> classes_;
};

bool satisfies_k(const KripkeModel& m, std::size_t w, const Formula& f);

struct LocalVeracity {
  /// m ⊨ f → B_a f
  bool implication_valid = false;
  /// m ⊨ f ↔ B_a f; only reported when every belief relation is serial.
  std::optional<bool> biconditional_valid;
};

/// Checks the local veracity of belief for an a-formula on a local model.
/// Throws Error(precondition) if `f` is not an a-formula or `m` is not local.
LocalVeracity check_local_veracity(const KripkeModel& m, AgentId a, const Formula& f);

}  // namespace hyperdox
