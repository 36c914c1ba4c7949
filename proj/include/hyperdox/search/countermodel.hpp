#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

#include "hyperdox/hypergraph/model.hpp"
#include "hyperdox/logic/formula.hpp"
#include "hyperdox/search/enumerate.hpp"

namespace hyperdox {

struct Countermodel {
  HypergraphModel model;
  /// Lowest-index edge falsifying the formula.
  std::size_t edge = 0;
};

struct SearchResult {
  /// Empty when the bounded space holds no countermodel.
  std::optional<Countermodel> witness;
  /// Models examined, counting the witness; the same for any worker count.
  std::size_t models_visited = 0;
  std::chrono::milliseconds elapsed{0};

  bool exhausted() const { return !witness; }
};

/// First model of the class, in enumeration order, with an edge falsifying
/// `f`. Throws Error(fragment) for knowledge formulas over H_su and
/// Error(undeclared_atom) for atoms outside the search workspace.
SearchResult countermodel(ModelClass cls, const Formula& f, const SearchBounds& b, std::size_t workers = 1);

/// Throws Error(undeclared_atom/undeclared_agent) if `f` mentions anything
/// outside `ws`.
void require_declared(const Formula& f, const Workspace& ws);

}  // namespace hyperdox
