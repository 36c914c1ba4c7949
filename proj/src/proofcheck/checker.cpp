#include "hyperdox/proofcheck/checker.hpp"

#include "hyperdox/error.hpp"
#include "hyperdox/logic/analysis.hpp"
#include "hyperdox/proofcheck/tautology.hpp"

namespace hyperdox {

std::string_view to_string(ProofError::Kind kind) {
  using K = ProofError::Kind;
  switch (kind) {
    case K::empty: return "empty";
    case K::fragment: return "fragment";
    case K::not_tautology: return "not_tautology";
    case K::too_large: return "too_large";
    case K::scheme_not_admitted: return "scheme_not_admitted";
    case K::no_scheme_match: return "no_scheme_match";
    case K::bad_reference: return "bad_reference";
    case K::mp_mismatch: return "mp_mismatch";
    case K::rule_not_admitted: return "rule_not_admitted";
    case K::nec_mismatch: return "nec_mismatch";
    case K::goal_mismatch: return "goal_mismatch";
  }
  return "unknown";
}

namespace {

using K = ProofError::Kind;

std::optional<ProofError> fail(K kind, std::size_t step, std::string reason) {
  return ProofError{kind, step, std::move(reason)};
}

std::optional<ProofError> check_reference(std::size_t ref, std::size_t here) {
  if (ref == 0 || ref >= here) {
    return fail(K::bad_reference, here,
                "reference to step " + std::to_string(ref) + " is not an earlier step");
  }
  return std::nullopt;
}

std::optional<ProofError> check_step(System sys, const std::vector<ProofStep>& steps, std::size_t here) {
  const auto& step = steps[here - 1];
  const auto& f = step.formula;
  return std::visit(
      [&](const auto& by) -> std::optional<ProofError> {
        using T = std::decay_t<decltype(by)>;
        if constexpr (std::is_same_v<T, TautologyRule>) {
          try {
            if (!is_tautology_instance(f)) return fail(K::not_tautology, here, "not a tautology instance");
          } catch (const Error& e) {
            return fail(K::too_large, here, e.what());
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, AxiomRule>) {
          const auto name = std::string(to_string(by.scheme));
          if (!admits(sys, by.scheme)) {
            return fail(K::scheme_not_admitted, here,
                        "scheme " + name + " is not an axiom of " + std::string(to_string(sys)));
          }
          if (!match_scheme(f, by.scheme)) return fail(K::no_scheme_match, here, "no scheme match for " + name);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ModusPonens>) {
          if (auto e = check_reference(by.premise, here)) return e;
          if (auto e = check_reference(by.implication, here)) return e;
          const auto& premise = steps[by.premise - 1].formula;
          const auto& imp = steps[by.implication - 1].formula;
          if (imp != implication(premise, f)) {
            return fail(K::mp_mismatch, here,
                        "step " + std::to_string(by.implication) + " is not step " + std::to_string(by.premise) +
                            " implying this formula");
          }
          return std::nullopt;
        } else {
          const bool knowledge = by.modality == Necessitation::Modality::knowledge;
          if (knowledge ? !admits_nec_k(sys) : !admits_nec_b(sys)) {
            return fail(K::rule_not_admitted, here,
                        std::string(knowledge ? "knowledge" : "belief") + " necessitation is not a rule of " +
                            std::string(to_string(sys)));
          }
          if (auto e = check_reference(by.step, here)) return e;
          const auto& src = steps[by.step - 1].formula;
          auto expected = knowledge ? Formula::knowledge(by.agent, src) : Formula::belief(by.agent, src);
          if (f != expected) {
            return fail(K::nec_mismatch, here,
                        "formula is not the necessitation of step " + std::to_string(by.step));
          }
          return std::nullopt;
        }
      },
      step.by);
}

}  // namespace

ProofResult check_proof(System sys, const std::vector<ProofStep>& steps) {
  if (steps.empty()) return {fail(K::empty, 0, "proof has no steps")};
  if (doxastic_only(sys)) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (!in_doxastic_fragment(steps[i].formula)) {
        return {fail(K::fragment, i + 1,
                     "knowledge operator outside the doxastic fragment of " + std::string(to_string(sys)))};
      }
    }
  }
  for (std::size_t i = 1; i <= steps.size(); ++i) {
    if (auto e = check_step(sys, steps, i)) return {e};
  }
  return {};
}

Formula derivation_goal(const std::vector<Formula>& premises, const Formula& goal) {
  if (premises.empty()) return goal;
  auto all = premises.front();
  for (std::size_t i = 1; i < premises.size(); ++i) all = Formula::conjunction(all, premises[i]);
  return implication(all, goal);
}

ProofResult check_derivation(System sys, const std::vector<Formula>& premises, const Formula& goal,
                             const std::vector<ProofStep>& steps) {
  auto result = check_proof(sys, steps);
  if (!result.ok()) return result;
  if (steps.back().formula != derivation_goal(premises, goal)) {
    return {fail(K::goal_mismatch, steps.size(), "last step is not the conjoined premises implying the goal")};
  }
  return result;
}

}  // namespace hyperdox
