#pragma once

#include <cstddef>
#include <vector>

#include "hyperdox/hypergraph/model.hpp"
#include "hyperdox/kripke/model.hpp"
#include "hyperdox/kripke/relation.hpp"
#include "hyperdox/logic/formula.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

Matrix to_matrix(const hyperdox::Relation& r);

/// Reflexive, symmetric, transitive closure by Warshall's algorithm.
Matrix warshall_equivalence(const hyperdox::Relation& r);

/// Reflexive-transitive closure by Warshall's algorithm.
Matrix warshall_closure(const hyperdox::Relation& r);

bool transitive(const Matrix& m);
bool euclidean(const Matrix& m);
bool serial(const Matrix& m);
bool reflexive(const Matrix& m);
bool symmetric(const Matrix& m);

/// Truth by the clauses, with K read off the Warshall equivalence.
bool satisfies_k(const hyperdox::KripkeModel& m, std::size_t w, const hyperdox::Formula& f);

/// Truth by the clauses, recomputing accessibility from tails and heads at
/// every modal node.
bool satisfies_h(const hyperdox::HypergraphModel& m, std::size_t e, const hyperdox::Formula& f);

/// e1 →B_a e2 straight from the definition.
bool doxastic_step(const hyperdox::HypergraphModel& m, hyperdox::AgentId a, std::size_t e1, std::size_t e2);
bool epistemic_step(const hyperdox::HypergraphModel& m, hyperdox::AgentId a, std::size_t e1, std::size_t e2);

/// Number of core formulas of exactly `size` nodes and depth at most `depth`.
std::size_t formula_count(std::size_t vars, std::size_t agents, std::size_t depth, std::size_t size,
                          bool knowledge);

}  // namespace oracle
