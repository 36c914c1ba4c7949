#include "hyperdox/proofcheck/schemes.hpp"

#include <algorithm>
#include <array>
#include <memory>

#include "hyperdox/error.hpp"

namespace hyperdox {

std::string_view to_string(System s) {
  switch (s) {
    case System::EDL: return "EDL";
    case System::LocKD45: return "LocKD45";
    case System::LocK45: return "LocK45";
  }
  return "?";
}

std::optional<System> parse_system(std::string_view name) {
  for (auto s : {System::EDL, System::LocKD45, System::LocK45})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

bool doxastic_only(System s) { return s != System::EDL; }
bool admits_nec_k(System s) { return s == System::EDL; }
bool admits_nec_b(System s) { return s != System::EDL; }

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::K_B: return "K_B";
    case Scheme::K_K: return "K_K";
    case Scheme::D_B: return "D_B";
    case Scheme::B4: return "4_B";
    case Scheme::B5: return "5_B";
    case Scheme::T_K: return "T_K";
    case Scheme::K4: return "4_K";
    case Scheme::K5: return "5_K";
    case Scheme::SPI: return "SPI";
    case Scheme::SNI: return "SNI";
    case Scheme::K_IB: return "K_IB";
    case Scheme::Loc: return "Loc";
  }
  return "?";
}

const std::vector<Scheme>& all_schemes() {
  static const std::vector<Scheme> all{Scheme::K_B, Scheme::K_K, Scheme::D_B, Scheme::B4,  Scheme::B5,   Scheme::T_K,
                                       Scheme::K4,  Scheme::K5,  Scheme::SPI, Scheme::SNI, Scheme::K_IB, Scheme::Loc};
  return all;
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (auto s : all_schemes())
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::vector<Scheme> admitted_schemes(System s) {
  switch (s) {
    case System::EDL: return all_schemes();
    case System::LocKD45: return {Scheme::K_B, Scheme::D_B, Scheme::B4, Scheme::B5, Scheme::Loc};
    case System::LocK45: return {Scheme::K_B, Scheme::B4, Scheme::B5, Scheme::Loc};
  }
  return {};
}

bool admits(System sys, Scheme s) {
  auto list = admitted_schemes(sys);
  return std::find(list.begin(), list.end(), s) != list.end();
}

namespace {

// Scheme shapes over the core constructors, with metavariable leaves.
struct Pattern {
  enum class Kind { phi, psi, p, neg, conj, bel, know } kind;
  std::shared_ptr<const Pattern> left, right;
};
using P = std::shared_ptr<const Pattern>;

P leaf(Pattern::Kind k) { return std::make_shared<Pattern>(Pattern{k, nullptr, nullptr}); }
P neg(P x) { return std::make_shared<Pattern>(Pattern{Pattern::Kind::neg, std::move(x), nullptr}); }
P conj(P x, P y) { return std::make_shared<Pattern>(Pattern{Pattern::Kind::conj, std::move(x), std::move(y)}); }
P bel(P x) { return std::make_shared<Pattern>(Pattern{Pattern::Kind::bel, std::move(x), nullptr}); }
P know(P x) { return std::make_shared<Pattern>(Pattern{Pattern::Kind::know, std::move(x), nullptr}); }
P imp(P x, P y) { return neg(conj(neg(neg(std::move(x))), neg(std::move(y)))); }

P shape(Scheme s) {
  using K = Pattern::Kind;
  auto phi = leaf(K::phi);
  auto psi = leaf(K::psi);
  auto p = leaf(K::p);
  switch (s) {
    case Scheme::K_B: return imp(bel(imp(phi, psi)), imp(bel(phi), bel(psi)));
    case Scheme::K_K: return imp(know(imp(phi, psi)), imp(know(phi), know(psi)));
    case Scheme::D_B: return neg(bel(conj(phi, neg(phi))));
    case Scheme::B4: return imp(bel(phi), bel(bel(phi)));
    case Scheme::B5: return imp(neg(bel(phi)), bel(neg(bel(phi))));
    case Scheme::T_K: return imp(know(phi), phi);
    case Scheme::K4: return imp(know(phi), know(know(phi)));
    case Scheme::K5: return imp(neg(know(phi)), know(neg(know(phi))));
    case Scheme::SPI: return imp(bel(phi), know(bel(phi)));
    case Scheme::SNI: return imp(neg(bel(phi)), know(neg(bel(phi))));
    case Scheme::K_IB: return imp(know(phi), bel(phi));
    case Scheme::Loc: return conj(imp(p, bel(p)), imp(neg(p), bel(neg(p))));
  }
  return nullptr;
}

const P& cached_shape(Scheme s) {
  static const auto table = [] {
    std::array<P, 12> t;
    for (auto x : all_schemes()) t[static_cast<std::size_t>(x)] = shape(x);
    return t;
  }();
  return table[static_cast<std::size_t>(s)];
}

bool bind(std::optional<Formula>& slot, const Formula& f) {
  if (!slot) {
    slot = f;
    return true;
  }
  return *slot == f;
}

bool bind_agent(Substitution& sub, AgentId a) {
  if (!sub.agent) {
    sub.agent = a;
    return true;
  }
  return *sub.agent == a;
}

bool match(const Pattern& pat, const Formula& f, Substitution& sub) {
  using K = Pattern::Kind;
  switch (pat.kind) {
    case K::phi: return bind(sub.phi, f);
    case K::psi: return bind(sub.psi, f);
    case K::p:
      if (f.kind() != Connective::atom) return false;
      if (sub.p) return *sub.p == f.var();
      sub.p = f.var();
      return true;
    case K::neg: return f.kind() == Connective::negation && match(*pat.left, f.operand(), sub);
    case K::conj:
      return f.kind() == Connective::conjunction && match(*pat.left, f.left(), sub) &&
             match(*pat.right, f.right(), sub);
    case K::bel: return f.kind() == Connective::belief && bind_agent(sub, f.agent()) && match(*pat.left, f.operand(), sub);
    case K::know:
      return f.kind() == Connective::knowledge && bind_agent(sub, f.agent()) && match(*pat.left, f.operand(), sub);
  }
  return false;
}

Formula build(const Pattern& pat, const Substitution& sub) {
  using K = Pattern::Kind;
  auto need = [](const auto& slot, const char* what) {
    if (!slot) throw Error(ErrorKind::input, std::string("scheme instantiation lacks a binding for ") + what);
    return *slot;
  };
  switch (pat.kind) {
    case K::phi: return need(sub.phi, "phi");
    case K::psi: return need(sub.psi, "psi");
    case K::p: return Formula::atom(need(sub.p, "p"));
    case K::neg: return Formula::negation(build(*pat.left, sub));
    case K::conj: return Formula::conjunction(build(*pat.left, sub), build(*pat.right, sub));
    case K::bel: return Formula::belief(need(sub.agent, "the agent"), build(*pat.left, sub));
    case K::know: return Formula::knowledge(need(sub.agent, "the agent"), build(*pat.left, sub));
  }
  throw Error(ErrorKind::input, "bad scheme shape");
}

}  // namespace

std::optional<Substitution> match_scheme(const Formula& f, Scheme s) {
  Substitution sub;
  if (!match(*cached_shape(s), f, sub)) return std::nullopt;
  if (s == Scheme::Loc && sub.p->owner != *sub.agent) return std::nullopt;
  return sub;
}

Formula instantiate(Scheme s, const Substitution& sub) {
  if (s == Scheme::Loc && sub.p && sub.agent && sub.p->owner != *sub.agent) {
    throw Error(ErrorKind::input, "Loc atom must belong to the agent");
  }
  return build(*cached_shape(s), sub);
}

}  // namespace hyperdox
