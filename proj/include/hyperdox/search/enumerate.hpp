#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperdox/hypergraph/model.hpp"
#include "hyperdox/logic/workspace.hpp"

namespace hyperdox {

enum class ModelClass { h_su, h_sut, all };

/// "H_su", "H_sut", "all".
std::string_view to_string(ModelClass c);
std::optional<ModelClass> parse_model_class(std::string_view name);

struct SearchBounds {
  std::size_t n_agents = 1;
  std::size_t max_edges = 1;
  std::size_t vars_per_agent = 0;
  /// 0 means "same as max_edges", which is the most a model using every
  /// vertex can have.
  std::size_t max_vertices_per_agent = 0;
  /// Atom placements are exhaustive up to this many variables per agent and
  /// sampled beyond it.
  std::size_t exhaustive_vars = 2;
  std::size_t atom_samples = 16;
  std::uint64_t seed = 0;
};

/// The workspace every enumerated model lives in: agents a, b, ... with
/// variables p_<agent>_1..vars_per_agent.
Workspace search_workspace(const SearchBounds& b);

/// Compact description of one enumerated model. Vertices are numbered per
/// agent; `atom_masks[a][i]` holds the variables of the i-th a-vertex as bits
/// and `edge_codes` the edges in mixed-radix form, strictly increasing.
struct ModelSpec {
  std::vector<std::size_t> vertices_per_agent;
  std::vector<std::vector<std::uint32_t>> atom_masks;
  std::vector<std::uint32_t> edge_codes;
  bool partial_edges = false;
};

/// Vertices are named a1, a2, b1, ... and edges e1..eN.
HypergraphModel build_model(const Workspace& ws, const ModelSpec& spec);

/// Visits the canonical representative of every model of the class within
/// bounds, in a fixed order, until `visit` returns false. Every vertex
/// occurs in some edge and edges are pairwise distinct. Throws Error(limit)
/// if the bounds exceed the encoding.
void for_each_model_spec(ModelClass cls, const SearchBounds& b, const std::function<bool(const ModelSpec&)>& visit);

void for_each_model(ModelClass cls, const SearchBounds& b, const std::function<bool(const HypergraphModel&)>& visit);

std::vector<HypergraphModel> enumerate_models(ModelClass cls, const SearchBounds& b);

}  // namespace hyperdox
