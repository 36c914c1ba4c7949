#include "hyperdox/kripke/satisfaction.hpp"

#include <algorithm>

#include "hyperdox/error.hpp"
#include "hyperdox/logic/analysis.hpp"

namespace hyperdox {

KripkeEvaluator::KripkeEvaluator(const KripkeModel& m) : m_(m), classes_(m.workspace().agent_count()) {}

const std::vector<std::size_t>& KripkeEvaluator::classes(AgentId a) {
  auto& slot = classes_.at(a.index);
  if (!slot) slot = equivalence_classes(m_.belief(a));
  return *slot;
}

std::vector<char> KripkeEvaluator::truth_set(const Formula& f) {
  const auto n = m_.world_count();
  std::vector<char> out(n);
  switch (f.kind()) {
    case Connective::atom:
      for (std::size_t w = 0; w < n; ++w) out[w] = m_.holds(w, f.var());
      break;
    case Connective::negation: {
      auto sub = truth_set(f.operand());
      for (std::size_t w = 0; w < n; ++w) out[w] = !sub[w];
      break;
    }
    case Connective::conjunction: {
      auto l = truth_set(f.left());
      auto r = truth_set(f.right());
      for (std::size_t w = 0; w < n; ++w) out[w] = l[w] && r[w];
      break;
    }
    case Connective::belief: {
      auto sub = truth_set(f.operand());
      const auto& rel = m_.belief(f.agent());
      for (std::size_t w = 0; w < n; ++w) {
        auto s = rel.successors(w);
        out[w] = std::all_of(s.begin(), s.end(), [&](std::size_t v) { return sub[v] != 0; });
      }
      break;
    }
    case Connective::knowledge: {
      auto sub = truth_set(f.operand());
      const auto& label = classes(f.agent());
      std::vector<char> class_ok(n, 1);
      for (std::size_t w = 0; w < n; ++w)
        if (!sub[w]) class_ok[label[w]] = 0;
      for (std::size_t w = 0; w < n; ++w) out[w] = class_ok[label[w]];
      break;
    }
  }
  return out;
}

bool KripkeEvaluator::satisfies(std::size_t w, const Formula& f) {
  if (w >= m_.world_count()) throw Error(ErrorKind::input, "world index out of range");
  return truth_set(f)[w] != 0;
}

bool KripkeEvaluator::valid(const Formula& f) {
  auto t = truth_set(f);
  return std::all_of(t.begin(), t.end(), [](char c) { return c != 0; });
}

bool satisfies_k(const KripkeModel& m, std::size_t w, const Formula& f) {
  return KripkeEvaluator(m).satisfies(w, f);
}

LocalVeracity check_local_veracity(const KripkeModel& m, AgentId a, const Formula& f) {
  if (!is_agent_formula(f, a)) {
    throw Error(ErrorKind::precondition,
                "formula is not a " + m.workspace().agent_name(a) + "-formula");
  }
  if (!is_local(m)) throw Error(ErrorKind::precondition, "model is not local");

  KripkeEvaluator eval(m);
  auto believed = Formula::belief(a, f);
  LocalVeracity out;
  out.implication_valid = eval.valid(implication(f, believed));
  bool serial = true;
  for (auto b : m.workspace().agents()) serial = serial && relation_properties(m.belief(b)).serial;
  if (serial) out.biconditional_valid = eval.valid(biconditional(f, believed));
  return out;
}

}  // namespace hyperdox
