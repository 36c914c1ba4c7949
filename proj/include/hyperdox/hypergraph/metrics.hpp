#pragma once

#include "hyperdox/hypergraph/model.hpp"
#include "hyperdox/report.hpp"

namespace hyperdox {

/// Rank, n-uniformity (n = agent count), simplicity, tail-completeness and
/// H^su / H^sut membership.
ClassReport graph_metrics(const HypergraphModel& m);

}  // namespace hyperdox
