#pragma once

#include <cstddef>
#include <vector>

#include "hyperdox/hypergraph/model.hpp"

namespace hyperdox {

/// An inclusion-maximal undirected vertex set and the edges realizing it.
struct Facet {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
};

/// Facets of the simplicial complex induced by the undirected edges, ordered
/// by first realizing edge.
std::vector<Facet> induced_complex(const HypergraphModel& m);

}  // namespace hyperdox
