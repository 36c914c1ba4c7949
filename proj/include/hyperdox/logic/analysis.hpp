#pragma once

#include <cstddef>
#include <vector>

#include "hyperdox/logic/formula.hpp"

namespace hyperdox {

struct FragmentInfo {
  /// No knowledge operator occurs.
  bool in_doxastic_fragment = false;
  /// Agents `a` for which `f` is an a-formula: every atom is a's and every
  /// modality is B{a} or K{a}. Sorted; at most one element.
  std::vector<AgentId> agent_formula_for;
};

FragmentInfo fragment_check(const Formula& f);

inline bool in_doxastic_fragment(const Formula& f) { return fragment_check(f).in_doxastic_fragment; }
bool is_agent_formula(const Formula& f, AgentId a);

std::size_t modal_depth(const Formula& f);

}  // namespace hyperdox
