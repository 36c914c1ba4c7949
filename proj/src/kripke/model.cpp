#include "hyperdox/kripke/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "hyperdox/error.hpp"

namespace hyperdox {

KripkeModel::KripkeModel(Workspace ws, std::vector<std::string> worlds, std::vector<Relation> belief,
                         std::vector<std::vector<PropVar>> valuation)
    : ws_(std::move(ws)), worlds_(std::move(worlds)), belief_(std::move(belief)), valuation_(std::move(valuation)) {
  if (worlds_.empty()) throw Error(ErrorKind::validation, "kripke model has no worlds");
  std::unordered_set<std::string> seen;
  for (const auto& w : worlds_) {
    if (!seen.insert(w).second) throw Error(ErrorKind::validation, "duplicate world '" + w + "'");
  }
  if (belief_.size() != ws_.agent_count()) {
    throw Error(ErrorKind::validation, "expected one belief relation per agent");
  }
  for (std::size_t a = 0; a < belief_.size(); ++a) {
    if (belief_[a].domain_size() != worlds_.size()) {
      throw Error(ErrorKind::validation, "belief relation of agent '" + ws_.agent_name(AgentId{a}) +
                                             "' is not over the model's worlds");
    }
  }
  if (valuation_.size() != worlds_.size()) throw Error(ErrorKind::validation, "expected one valuation per world");
  for (std::size_t w = 0; w < valuation_.size(); ++w) {
    auto& v = valuation_[w];
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (auto p : v) {
      if (!ws_.declares(p)) {
        throw Error(ErrorKind::validation, "world '" + worlds_[w] + "' carries an undeclared variable");
      }
    }
  }
}

std::optional<std::size_t> KripkeModel::find_world(std::string_view name) const {
  auto it = std::find(worlds_.begin(), worlds_.end(), name);
  if (it == worlds_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - worlds_.begin());
}

bool KripkeModel::holds(std::size_t w, PropVar p) const {
  const auto& v = valuation_.at(w);
  return std::binary_search(v.begin(), v.end(), p);
}

std::vector<PropVar> KripkeModel::local_valuation(std::size_t w, AgentId a) const {
  std::vector<PropVar> out;
  for (auto p : valuation_.at(w))
    if (p.owner == a) out.push_back(p);
  return out;
}

namespace {

// First pair (u, v) in sym(B_a) whose worlds disagree on Var_a, if any.
std::optional<Relation::Pair> locality_violation(const KripkeModel& m, AgentId a) {
  for (const auto& [u, v] : m.belief(a).pairs()) {
    if (m.local_valuation(u, a) != m.local_valuation(v, a)) return Relation::Pair{u, v};
  }
  return std::nullopt;
}

// First pair of distinct worlds that no agent's generated equivalence separates.
std::optional<Relation::Pair> properness_violation(const KripkeModel& m) {
  std::vector<std::vector<std::size_t>> classes;
  for (auto a : m.workspace().agents()) classes.push_back(equivalence_classes(m.belief(a)));
  for (std::size_t u = 0; u < m.world_count(); ++u) {
    for (std::size_t v = u + 1; v < m.world_count(); ++v) {
      bool separated = std::any_of(classes.begin(), classes.end(),
                                   [&](const auto& label) { return label[u] != label[v]; });
      if (!separated) return Relation::Pair{u, v};
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_local(const KripkeModel& m) {
  for (auto a : m.workspace().agents())
    if (locality_violation(m, a)) return false;
  return true;
}

bool is_proper(const KripkeModel& m) { return !properness_violation(m); }

ClassReport model_properties(const KripkeModel& m) {
  ClassReport report;
  KripkeClassFlags flags;
  const auto& ws = m.workspace();

  flags.local = true;
  for (auto a : ws.agents()) {
    if (auto bad = locality_violation(m, a)) {
      flags.local = false;
      report.evidence.push_back("not local: worlds " + m.world_name(bad->first) + " and " +
                                m.world_name(bad->second) + " are related by agent " + ws.agent_name(a) +
                                " but disagree on its variables");
    }
  }
  if (auto bad = properness_violation(m)) {
    report.evidence.push_back("not proper: no agent distinguishes worlds " + m.world_name(bad->first) + " and " +
                              m.world_name(bad->second));
  } else {
    flags.proper = true;
  }

  flags.serial = flags.transitive = flags.euclidean = true;
  for (auto a : ws.agents()) {
    auto p = relation_properties(m.belief(a));
    flags.agents.push_back(AgentFrameFlags{p.serial, p.transitive, p.euclidean});
    flags.serial = flags.serial && p.serial;
    flags.transitive = flags.transitive && p.transitive;
    flags.euclidean = flags.euclidean && p.euclidean;
    const auto& name = ws.agent_name(a);
    if (!p.serial) report.evidence.push_back("belief relation of agent " + name + " is not serial");
    if (!p.transitive) report.evidence.push_back("belief relation of agent " + name + " is not transitive");
    if (!p.euclidean) report.evidence.push_back("belief relation of agent " + name + " is not Euclidean");
  }
  flags.in_k_te = flags.local && flags.proper && flags.transitive && flags.euclidean;
  flags.in_k_ste = flags.in_k_te && flags.serial;
  report.kripke = flags;
  return report;
}

}  // namespace hyperdox
