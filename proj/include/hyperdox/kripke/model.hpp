#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdox/kripke/relation.hpp"
#include "hyperdox/logic/workspace.hpp"
#include "hyperdox/report.hpp"

namespace hyperdox {

/// A doxastic Kripke model: named worlds, one belief relation per agent and
/// a valuation. Knowledge is never stored; it is the generated equivalence of
/// the agent's belief relation.
class KripkeModel {
 public:
  /// Validates shapes: non-empty worlds with unique names, one relation per
  /// agent over the world set, declared variables only. Throws Error(validation).
  KripkeModel(Workspace ws, std::vector<std::string> worlds, std::vector<Relation> belief,
              std::vector<std::vector<PropVar>> valuation);

  const Workspace& workspace() const { return ws_; }
  std::size_t world_count() const { return worlds_.size(); }
  const std::vector<std::string>& world_names() const { return worlds_; }
  const std::string& world_name(std::size_t w) const { return worlds_.at(w); }
  std::optional<std::size_t> find_world(std::string_view name) const;

  const Relation& belief(AgentId a) const { return belief_.at(a.index); }
  /// Sorted, duplicate-free.
  const std::vector<PropVar>& valuation(std::size_t w) const { return valuation_.at(w); }
  bool holds(std::size_t w, PropVar p) const;
  /// V(w) ∩ Var_a.
  std::vector<PropVar> local_valuation(std::size_t w, AgentId a) const;

 private:
  Workspace ws_;
  std::vector<std::string> worlds_;
  std::vector<Relation> belief_;
  std::vector<std::vector<PropVar>> valuation_;
};

/// Locality, properness, per-agent frame flags and K^te / K^ste membership.
ClassReport model_properties(const KripkeModel& m);

bool is_local(const KripkeModel& m);
bool is_proper(const KripkeModel& m);

}  // namespace hyperdox
