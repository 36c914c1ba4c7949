#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperdox/logic/formula.hpp"
#include "hyperdox/proofcheck/schemes.hpp"

namespace hyperdox {

struct TautologyRule {};

struct AxiomRule {
  Scheme scheme;
};

/// From step `premise` (φ) and step `implication` (φ → ψ), infer ψ.
/// Step references are 1-based.
struct ModusPonens {
  std::size_t premise = 0;
  std::size_t implication = 0;
};

/// From step `step` (φ), infer K_a φ or B_a φ.
struct Necessitation {
  enum class Modality { knowledge, belief } modality;
  AgentId agent;
  std::size_t step = 0;
};

using Justification = std::variant<TautologyRule, AxiomRule, ModusPonens, Necessitation>;

struct ProofStep {
  Formula formula;
  Justification by;
};

struct ProofError {
  enum class Kind {
    empty,
    fragment,
    not_tautology,
    too_large,
    scheme_not_admitted,
    no_scheme_match,
    bad_reference,
    mp_mismatch,
    rule_not_admitted,
    nec_mismatch,
    goal_mismatch,
  };
  Kind kind;
  /// 1-based; 0 when the error concerns the proof as a whole.
  std::size_t step = 0;
  std::string reason;
};

std::string_view to_string(ProofError::Kind kind);

struct ProofResult {
  std::optional<ProofError> error;
  bool ok() const { return !error; }
};

/// Accepts iff every step is justified in `sys`. For the doxastic systems
/// every step is first checked to be free of knowledge operators. The first
/// failing step is reported.
ProofResult check_proof(System sys, const std::vector<ProofStep>& steps);

/// ⋀premises → goal, with premises conjoined left to right; just `goal`
/// when there are no premises.
Formula derivation_goal(const std::vector<Formula>& premises, const Formula& goal);

/// Checks that `steps` prove goal from the finite premise set, i.e. that
/// they form a proof ending in derivation_goal(premises, goal).
ProofResult check_derivation(System sys, const std::vector<Formula>& premises, const Formula& goal,
                             const std::vector<ProofStep>& steps);

}  // namespace hyperdox
