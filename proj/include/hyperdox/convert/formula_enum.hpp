#pragma once

#include <cstddef>
#include <vector>

#include "hyperdox/logic/formula.hpp"

namespace hyperdox {

/// Every formula over the core constructors with at most `max_size` nodes and
/// modal depth at most `max_depth`, without duplicates. Ordered by size, then
/// atoms, negations, conjunctions, beliefs and knowledge (by agent).
std::vector<Formula> enumerate_formulas(const std::vector<PropVar>& vars, const std::vector<AgentId>& agents,
                                        std::size_t max_depth, std::size_t max_size,
                                        bool include_knowledge = true);

}  // namespace hyperdox
