#pragma once

#include <cstddef>
#include <vector>

#include "hyperdox/hypergraph/model.hpp"
#include "hyperdox/kripke/model.hpp"
#include "hyperdox/logic/formula.hpp"

namespace hyperdox {

struct EquivalenceRow {
  std::size_t world = 0;
  std::size_t edge = 0;
  /// Index into the formula list.
  std::size_t formula = 0;
  bool kripke_value = false;
  bool hypergraph_value = false;

  bool agree() const { return kripke_value == hypergraph_value; }
};

struct EquivalenceReport {
  bool all_agree = true;
  /// One row per (world, formula), world-major.
  std::vector<EquivalenceRow> rows;
  std::size_t disagreements = 0;
};

/// Evaluates every formula at every world of `mk` and at its image
/// `edge_of_world[w]` in `mh`. Knowledge formulas are only admitted when
/// `mk` is in K^ste and `mh` in H^sut; otherwise throws Error(fragment).
/// Throws Error(input) if the map is not total or points outside `mh`.
EquivalenceReport check_modal_equivalence(const KripkeModel& mk, const HypergraphModel& mh,
                                          const std::vector<std::size_t>& edge_of_world,
                                          const std::vector<Formula>& formulas);

}  // namespace hyperdox
