#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hyperdox/hypergraph/model.hpp"
#include "hyperdox/kripke/model.hpp"
#include "hyperdox/report.hpp"

namespace hyperdox {

enum class Direction { kripke_to_hypergraph, hypergraph_to_kripke };

std::string_view to_string(Direction d);

/// Records how the states of a converted model relate to its source.
struct ConversionCertificate {
  Direction direction = Direction::kripke_to_hypergraph;
  /// Source state name to target state name, in source order.
  std::vector<std::pair<std::string, std::string>> map;
  bool injective = true;
  ClassReport class_before;
  ClassReport class_after;
};

struct HypergraphConversion {
  HypergraphModel model;
  /// Edge index of each world.
  std::vector<std::size_t> edge_of_world;
  ConversionCertificate certificate;
};

struct KripkeConversion {
  KripkeModel model;
  /// World index of each edge (the identity).
  std::vector<std::size_t> world_of_edge;
  ConversionCertificate certificate;
};

/// Builds the hypergraph whose a-vertices are the classes of the generated
/// equivalence of B_a and whose edge for world u has the classes of u in its
/// tail exactly for the agents with (u, u) ∈ B_a. Vertex ids read
/// "<agent>:{w,...}". Worlds that yield equal edges share one edge, which
/// happens only for improper models and clears `injective`.
/// Throws Error(precondition) if `m` is not local.
HypergraphConversion kripke_to_hypergraph(const KripkeModel& m);

/// Worlds are the edges, B_a is the doxastic accessibility of a and the
/// valuation of a world is the atom set of its edge.
KripkeConversion hypergraph_to_kripke(const HypergraphModel& m);

}  // namespace hyperdox
