#pragma once

#include <cstddef>

#include "hyperdox/logic/formula.hpp"

namespace hyperdox {

/// Largest number of distinct letters the truth-table check accepts.
inline constexpr std::size_t max_tautology_letters = 20;

/// Replaces every outermost modal subformula and every atom by a letter and
/// decides propositional validity by truth table. Throws Error(limit) when
/// more than `max_tautology_letters` letters arise.
bool is_tautology_instance(const Formula& f);

}  // namespace hyperdox
