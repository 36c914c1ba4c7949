#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdox/error.hpp"
#include "hyperdox/logic/workspace.hpp"

namespace hyperdox {

/// A local state: an agent-colored vertex carrying the agent's true variables.
struct Vertex {
  std::string id;
  AgentId color;
  std::vector<PropVar> atoms;
};

/// A global state. Tail and head hold vertex indices and must be disjoint;
/// either may be empty.
struct DirectedEdge {
  std::string name;
  std::vector<std::size_t> tail;
  std::vector<std::size_t> head;
};

/// One structural defect found while validating a hypergraph model.
struct Violation {
  enum class Kind {
    no_vertices,
    duplicate_vertex,
    unknown_color,
    undeclared_atom,
    atom_color_mismatch,
    dangling_vertex,
    repeated_vertex,
    tail_head_overlap,
    non_chromatic,
    duplicate_edge_name,
  };
  Kind kind;
  /// Offending vertex id or edge name.
  std::string subject;
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// A validated chromatic directed hypergraph with vertex valuations.
/// Edges are identified by position; unnamed edges are called e1..eN.
class HypergraphModel {
 public:
  /// Throws ValidationError listing every violation found.
  HypergraphModel(Workspace ws, std::vector<Vertex> vertices, std::vector<DirectedEdge> edges);

  const Workspace& workspace() const { return ws_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<DirectedEdge>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t u) const { return vertices_.at(u); }
  const DirectedEdge& edge(std::size_t e) const { return edges_.at(e); }

  /// ē = T(e) ∪ H(e), sorted.
  const std::vector<std::size_t>& undirected(std::size_t e) const { return undirected_.at(e); }
  /// The vertex of color `a` in ē; unique because the graph is chromatic.
  std::optional<std::size_t> vertex_of(std::size_t e, AgentId a) const;
  bool in_tail(std::size_t e, std::size_t u) const;
  /// ℓ(e): union of the vertex valuations over ē, sorted.
  const std::vector<PropVar>& edge_atoms(std::size_t e) const { return edge_atoms_.at(e); }
  bool holds(std::size_t e, PropVar p) const;

  std::optional<std::size_t> find_edge(std::string_view name) const;
  std::optional<std::size_t> find_vertex(std::string_view id) const;

 private:
  Workspace ws_;
  std::vector<Vertex> vertices_;
  std::vector<DirectedEdge> edges_;
  std::vector<std::vector<std::size_t>> undirected_;
  // slot_[e * n + a]: vertex of color a in edge e, or npos.
  std::vector<std::size_t> slot_;
  std::vector<std::vector<PropVar>> edge_atoms_;
};

/// Model data by name, as read from a file.
struct RawVertex {
  std::string id;
  std::string color;
  std::vector<std::string> atoms;
};

struct RawEdge {
  std::optional<std::string> name;
  std::vector<std::string> tail;
  std::vector<std::string> head;
};

struct RawHypergraph {
  Workspace workspace;
  std::vector<RawVertex> vertices;
  std::vector<RawEdge> edges;
};

std::vector<Violation> find_violations(const RawHypergraph& raw);

/// Resolves names and validates. Throws ValidationError naming every
/// offending vertex or edge.
HypergraphModel validate_model(const RawHypergraph& raw);

std::vector<PropVar> edge_atoms(const HypergraphModel& m, std::size_t e);

}  // namespace hyperdox
