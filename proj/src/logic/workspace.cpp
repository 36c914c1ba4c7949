#include "hyperdox/logic/workspace.hpp"

#include <cctype>

#include "hyperdox/error.hpp"

namespace hyperdox {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

Workspace::Workspace(std::vector<std::string> agents,
                     std::vector<std::vector<std::string>> vars)
    : agents_(std::move(agents)), vars_(std::move(vars)) {
  if (agents_.empty()) throw Error(ErrorKind::workspace, "workspace declares no agents");
  if (vars_.size() != agents_.size()) {
    throw Error(ErrorKind::workspace, "variable lists do not match agent count");
  }
  for (std::size_t a = 0; a < agents_.size(); ++a) {
    const auto& name = agents_[a];
    if (!is_identifier(name)) {
      throw Error(ErrorKind::workspace, "invalid agent name '" + name + "'");
    }
    if (!agent_lookup_.emplace(name, a).second) {
      throw Error(ErrorKind::workspace, "duplicate agent '" + name + "'");
    }
  }
  for (std::size_t a = 0; a < agents_.size(); ++a) {
    const std::string prefix = "p_" + agents_[a] + "_";
    for (std::size_t i = 0; i < vars_[a].size(); ++i) {
      const auto& v = vars_[a][i];
      if (!is_identifier(v) || v.size() <= prefix.size() || v.compare(0, prefix.size(), prefix) != 0) {
        throw Error(ErrorKind::workspace,
                    "variable '" + v + "' of agent '" + agents_[a] + "' must be named " + prefix + "<suffix>");
      }
      if (!var_lookup_.emplace(v, PropVar{AgentId{a}, i}).second) {
        throw Error(ErrorKind::workspace, "duplicate variable '" + v + "'");
      }
    }
  }
}

Workspace Workspace::standard(std::size_t agents, std::size_t vars_per_agent) {
  if (agents == 0 || agents > 26) {
    throw Error(ErrorKind::workspace, "standard workspaces support 1..26 agents");
  }
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> vars(agents);
  for (std::size_t a = 0; a < agents; ++a) {
    names.emplace_back(1, static_cast<char>('a' + a));
    for (std::size_t i = 1; i <= vars_per_agent; ++i) {
      vars[a].push_back("p_" + names.back() + "_" + std::to_string(i));
    }
  }
  return Workspace(std::move(names), std::move(vars));
}

std::vector<AgentId> Workspace::agents() const {
  std::vector<AgentId> out;
  for (std::size_t a = 0; a < agents_.size(); ++a) out.push_back(AgentId{a});
  return out;
}

const std::string& Workspace::agent_name(AgentId a) const { return agents_.at(a.index); }

std::optional<AgentId> Workspace::find_agent(std::string_view name) const {
  auto it = agent_lookup_.find(std::string(name));
  if (it == agent_lookup_.end()) return std::nullopt;
  return AgentId{it->second};
}

std::span<const std::string> Workspace::var_names(AgentId a) const { return vars_.at(a.index); }

std::vector<PropVar> Workspace::vars_of(AgentId a) const {
  std::vector<PropVar> out;
  for (std::size_t i = 0; i < var_count(a); ++i) out.push_back(PropVar{a, i});
  return out;
}

std::vector<PropVar> Workspace::all_vars() const {
  std::vector<PropVar> out;
  for (auto a : agents()) {
    auto mine = vars_of(a);
    out.insert(out.end(), mine.begin(), mine.end());
  }
  return out;
}

const std::string& Workspace::var_name(PropVar p) const {
  return vars_.at(p.owner.index).at(p.index);
}

std::optional<PropVar> Workspace::find_var(std::string_view name) const {
  auto it = var_lookup_.find(std::string(name));
  if (it == var_lookup_.end()) return std::nullopt;
  return it->second;
}

bool Workspace::declares(PropVar p) const {
  return p.owner.index < vars_.size() && p.index < vars_[p.owner.index].size();
}

std::optional<PropVar> Workspace::bottom_atom() const {
  if (vars_.front().empty()) return std::nullopt;
  return PropVar{AgentId{0}, 0};
}

}  // namespace hyperdox
