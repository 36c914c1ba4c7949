#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hyperdox/logic/formula.hpp"

namespace hyperdox {

enum class System { EDL, LocKD45, LocK45 };

std::string_view to_string(System s);
std::optional<System> parse_system(std::string_view name);

/// LocKD45 and LocK45 accept only formulas without knowledge operators.
bool doxastic_only(System s);
bool admits_nec_k(System s);
bool admits_nec_b(System s);

enum class Scheme { K_B, K_K, D_B, B4, B5, T_K, K4, K5, SPI, SNI, K_IB, Loc };

/// Names as written in proofs: "K_B", "4_B", "K_IB", "Loc", ...
std::string_view to_string(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

const std::vector<Scheme>& all_schemes();
std::vector<Scheme> admitted_schemes(System s);
bool admits(System sys, Scheme s);

/// Metavariable bindings. `phi`/`psi` are formulas, `agent` the agent of
/// every modality and `p` the atom of Loc, owned by `agent`.
struct Substitution {
  std::optional<Formula> phi;
  std::optional<Formula> psi;
  std::optional<AgentId> agent;
  std::optional<PropVar> p;
};

/// The bindings making `f` an instance of `s`, if any. Repeated
/// metavariables must bind equal subformulas.
std::optional<Substitution> match_scheme(const Formula& f, Scheme s);

/// Throws Error(input) if a metavariable the scheme uses is unbound or the
/// Loc atom is not owned by the agent.
Formula instantiate(Scheme s, const Substitution& sub);

}  // namespace hyperdox
