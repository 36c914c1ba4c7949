#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hyperdox {

/// Index of an agent in [0, n) for the workspace's fixed agent count n.
struct AgentId {
  std::size_t index = 0;

  friend auto operator<=>(const AgentId&, const AgentId&) = default;
};

/// A local variable: the `index`-th variable declared for `owner`.
/// Equality includes the owner, so variables of distinct agents never coincide.
struct PropVar {
  AgentId owner;
  std::size_t index = 0;

  friend auto operator<=>(const PropVar&, const PropVar&) = default;
};

/// The global signature shared by formulas and models: an ordered list of
/// agents and, per agent, its declared local variables.
///
/// Variable names must read `p_<agent>_<suffix>` for their owning agent and
/// are unique across the workspace. The designated atom used to desugar
/// `false` is the first variable of agent 0.
class Workspace {
 public:
  Workspace(std::vector<std::string> agents,
            std::vector<std::vector<std::string>> vars);

  /// Agents `a`, `b`, `c`, ... each with variables `p_<agent>_1..vars_per_agent`.
  static Workspace standard(std::size_t agents, std::size_t vars_per_agent);

  std::size_t agent_count() const { return agents_.size(); }
  std::vector<AgentId> agents() const;
  const std::string& agent_name(AgentId a) const;
  std::optional<AgentId> find_agent(std::string_view name) const;

  std::span<const std::string> var_names(AgentId a) const;
  std::size_t var_count(AgentId a) const { return var_names(a).size(); }
  std::vector<PropVar> vars_of(AgentId a) const;
  std::vector<PropVar> all_vars() const;
  const std::string& var_name(PropVar p) const;
  std::optional<PropVar> find_var(std::string_view name) const;
  bool declares(PropVar p) const;

  std::optional<PropVar> bottom_atom() const;

  friend bool operator==(const Workspace& x, const Workspace& y) {
    return x.agents_ == y.agents_ && x.vars_ == y.vars_;
  }

 private:
  std::vector<std::string> agents_;
  std::vector<std::vector<std::string>> vars_;
  std::unordered_map<std::string, std::size_t> agent_lookup_;
  std::unordered_map<std::string, PropVar> var_lookup_;
};

}  // namespace hyperdox
