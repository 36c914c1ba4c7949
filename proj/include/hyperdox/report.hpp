#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hyperdox {

/// Frame flags of one agent's belief relation.
struct AgentFrameFlags {
  bool serial = false;
  bool transitive = false;
  bool euclidean = false;
};

struct KripkeClassFlags {
  bool local = false;
  bool proper = false;
  std::vector<AgentFrameFlags> agents;
  bool serial = false;
  bool transitive = false;
  bool euclidean = false;
  /// Local, proper, transitive and Euclidean.
  bool in_k_te = false;
  /// Additionally serial.
  bool in_k_ste = false;
};

struct HypergraphClassFlags {
  std::size_t rank = 0;
  bool n_uniform = false;
  bool simple = false;
  bool tail_complete = false;
  bool in_h_su = false;
  bool in_h_sut = false;
};

/// Class membership of a model, with one human-readable line of evidence per
/// failed property (the first offending states).
struct ClassReport {
  std::optional<KripkeClassFlags> kripke;
  std::optional<HypergraphClassFlags> hypergraph;
  std::vector<std::string> evidence;
};

}  // namespace hyperdox
