#include <doctest.h>

#include <functional>

#include "generators.hpp"
#include "hyperdox/error.hpp"
#include "hyperdox/logic/parser.hpp"
#include "hyperdox/proofcheck/checker.hpp"
#include "hyperdox/proofcheck/tautology.hpp"

using namespace hyperdox;

namespace {

const Workspace& ws() {
  static const Workspace w({"a", "b"}, {{"p_a_1", "p_a_2"}, {"p_b_1"}});
  return w;
}

Formula f(const char* text) { return parse_formula(text, ws()); }

std::vector<ProofStep> contrapositive() {
  return {{f("K{a} p_a_1 -> B{a} p_a_1"), AxiomRule{Scheme::K_IB}},
          {f("(K{a} p_a_1 -> B{a} p_a_1) -> (~B{a} p_a_1 -> ~K{a} p_a_1)"), TautologyRule{}},
          {f("~B{a} p_a_1 -> ~K{a} p_a_1"), ModusPonens{1, 2}}};
}

}  // namespace

TEST_SUITE("proofcheck") {

TEST_CASE("scheme matching examples") {
  auto four = match_scheme(f("B{a} p_a_1 -> B{a} B{a} p_a_1"), Scheme::B4);
  REQUIRE(four);
  CHECK(*four->phi == f("p_a_1"));
  CHECK(*four->agent == AgentId{0});

  auto loc = match_scheme(f("(p_a_1 -> B{a} p_a_1) & (~p_a_1 -> B{a} ~p_a_1)"), Scheme::Loc);
  REQUIRE(loc);
  CHECK(*loc->p == *ws().find_var("p_a_1"));

  CHECK_FALSE(match_scheme(f("K{a} p_a_1 -> B{b} p_a_1"), Scheme::K_IB));
  CHECK_FALSE(match_scheme(f("(p_b_1 -> B{a} p_b_1) & (~p_b_1 -> B{a} ~p_b_1)"), Scheme::Loc));
  CHECK_FALSE(match_scheme(f("(p_a_1 -> B{a} p_a_1) & (~p_a_2 -> B{a} ~p_a_2)"), Scheme::Loc));
  CHECK_FALSE(match_scheme(f("B{a} p_a_1 -> B{a} B{a} p_a_2"), Scheme::B4));
}

TEST_CASE("D_B matches any formula in the contradiction slot") {
  CHECK(match_scheme(f("~B{a} (p_a_1 & ~p_a_1)"), Scheme::D_B));
  CHECK(match_scheme(f("~B{b} (K{a} p_a_2 & ~K{a} p_a_2)"), Scheme::D_B));
  CHECK(match_scheme(f("~B{a} false"), Scheme::D_B));
  CHECK_FALSE(match_scheme(f("~B{a} (p_a_1 & ~p_a_2)"), Scheme::D_B));
}

TEST_CASE("K_B binds both metaformulas") {
  auto m = match_scheme(f("B{b} (p_a_1 -> p_b_1) -> (B{b} p_a_1 -> B{b} p_b_1)"), Scheme::K_B);
  REQUIRE(m);
  CHECK(*m->phi == f("p_a_1"));
  CHECK(*m->psi == f("p_b_1"));
  CHECK_FALSE(match_scheme(f("B{b} (p_a_1 -> p_b_1) -> (B{b} p_a_2 -> B{b} p_b_1)"), Scheme::K_B));
}

TEST_CASE("instantiate then match recovers the bindings for every scheme") {
  testgen::Rng rng(79);
  for (int i = 0; i < 200; ++i) {
    for (auto s : all_schemes()) {
      Substitution sub;
      sub.agent = AgentId{testgen::uniform(rng, 0, 1)};
      sub.phi = testgen::random_formula(rng, ws(), {2, 6, true});
      sub.psi = testgen::random_formula(rng, ws(), {2, 6, true});
      auto vars = ws().vars_of(*sub.agent);
      sub.p = vars[testgen::uniform(rng, 0, vars.size() - 1)];
      auto inst = instantiate(s, sub);
      auto back = match_scheme(inst, s);
      REQUIRE(back);
      CHECK(instantiate(s, *back) == inst);
    }
  }
  Substitution missing;
  CHECK_THROWS_AS(instantiate(Scheme::B4, missing), Error);
}

TEST_CASE("scheme names round trip and systems admit the documented schemes") {
  for (auto s : all_schemes()) CHECK(parse_scheme(to_string(s)) == s);
  CHECK(admitted_schemes(System::EDL).size() == 12);
  CHECK(admitted_schemes(System::LocKD45).size() == 5);
  CHECK(admitted_schemes(System::LocK45).size() == 4);
  CHECK_FALSE(admits(System::LocK45, Scheme::D_B));
  CHECK(admits(System::LocKD45, Scheme::D_B));
}

TEST_CASE("tautology instances") {
  CHECK(is_tautology_instance(f("B{a} p_a_1 -> B{a} p_a_1")));
  CHECK_FALSE(is_tautology_instance(f("B{a} p_a_1 -> p_a_1")));
  CHECK(is_tautology_instance(f("(B{a} p_a_1 & (B{a} p_a_1 -> K{b} p_b_1)) -> K{b} p_b_1")));
  CHECK(is_tautology_instance(f("p_a_1 | ~p_a_1")));
  CHECK_FALSE(is_tautology_instance(f("B{a} p_a_1 | ~B{a} p_a_2")));
  CHECK(is_tautology_instance(f("true")));
}

TEST_CASE("tautology check rejects more than 20 letters") {
  Workspace big(std::vector<std::string>{"a"}, {[] {
                  std::vector<std::string> v;
                  for (int i = 1; i <= 21; ++i) v.push_back("p_a_" + std::to_string(i));
                  return v;
                }()});
  auto g = Formula::atom(PropVar{AgentId{0}, 0});
  for (std::size_t i = 1; i < 21; ++i) g = disjunction(g, Formula::atom(PropVar{AgentId{0}, i}));
  try {
    is_tautology_instance(g);
    FAIL("no limit error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::limit);
  }
}

TEST_CASE("tautology check agrees with brute-force valuation semantics") {
  // A tautology instance holds at every world of every model; spot-check that
  // random propositional shapes judged valid have no falsifying assignment.
  testgen::Rng rng(83);
  Workspace w = Workspace::standard(1, 3);
  for (int i = 0; i < 300; ++i) {
    auto g = testgen::random_formula(rng, w, {0, 12, false});
    bool valid = true;
    for (unsigned row = 0; row < 8 && valid; ++row) {
      std::function<bool(const Formula&)> eval = [&](const Formula& x) -> bool {
        switch (x.kind()) {
          case Connective::atom: return (row >> x.var().index) & 1;
          case Connective::negation: return !eval(x.operand());
          case Connective::conjunction: return eval(x.left()) && eval(x.right());
          default: return false;
        }
      };
      valid = eval(g);
    }
    CHECK(is_tautology_instance(g) == valid);
  }
}

TEST_CASE("the EDL contrapositive proof is accepted") {
  CHECK(check_proof(System::EDL, contrapositive()).ok());
}

TEST_CASE("mutations are rejected at the right step") {
  auto wrong_formula = contrapositive();
  wrong_formula[0].formula = f("K{a} p_a_1 -> B{b} p_a_1");
  auto r = check_proof(System::EDL, wrong_formula);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->step == 1);
  CHECK(r.error->kind == ProofError::Kind::no_scheme_match);

  auto swapped = contrapositive();
  swapped[2].by = ModusPonens{2, 1};
  r = check_proof(System::EDL, swapped);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->step == 3);
  CHECK(r.error->kind == ProofError::Kind::mp_mismatch);

  auto fragment = check_proof(System::LocKD45, contrapositive());
  REQUIRE_FALSE(fragment.ok());
  CHECK(fragment.error->step == 1);
  CHECK(fragment.error->kind == ProofError::Kind::fragment);

  auto forward = contrapositive();
  forward[2].by = ModusPonens{1, 3};
  r = check_proof(System::EDL, forward);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == ProofError::Kind::bad_reference);

  auto zero = contrapositive();
  zero[2].by = ModusPonens{0, 2};
  CHECK(check_proof(System::EDL, zero).error->kind == ProofError::Kind::bad_reference);

  auto spi = std::vector<ProofStep>{{f("B{a} p_a_1 -> K{a} B{a} p_a_1"), AxiomRule{Scheme::SPI}}};
  CHECK(check_proof(System::EDL, spi).ok());
  auto dox = std::vector<ProofStep>{{f("~B{a} (p_a_1 & ~p_a_1)"), AxiomRule{Scheme::D_B}}};
  CHECK(check_proof(System::LocKD45, dox).ok());
  CHECK(check_proof(System::LocK45, dox).error->kind == ProofError::Kind::scheme_not_admitted);
}

TEST_CASE("necessitation rules follow the system") {
  std::vector<ProofStep> nk{{f("p_a_1 | ~p_a_1"), TautologyRule{}},
                            {f("K{a} (p_a_1 | ~p_a_1)"),
                             Necessitation{Necessitation::Modality::knowledge, AgentId{0}, 1}}};
  CHECK(check_proof(System::EDL, nk).ok());
  auto nb = nk;
  nb[1] = {f("B{a} (p_a_1 | ~p_a_1)"), Necessitation{Necessitation::Modality::belief, AgentId{0}, 1}};
  CHECK(check_proof(System::LocK45, nb).ok());
  auto r = check_proof(System::EDL, nb);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->step == 2);
  CHECK(r.error->kind == ProofError::Kind::rule_not_admitted);
  auto mismatch = nb;
  mismatch[1].formula = f("B{b} (p_a_1 | ~p_a_1)");
  CHECK(check_proof(System::LocK45, mismatch).error->kind == ProofError::Kind::nec_mismatch);
  CHECK(check_proof(System::EDL, nk).ok());
}

TEST_CASE("every prefix of an accepted proof is accepted") {
  auto steps = contrapositive();
  for (std::size_t n = 1; n <= steps.size(); ++n) {
    std::vector<ProofStep> prefix(steps.begin(), steps.begin() + n);
    CHECK(check_proof(System::EDL, prefix).ok());
  }
  CHECK_FALSE(check_proof(System::EDL, {}).ok());
}

TEST_CASE("derivations from premises prove the conjoined implication") {
  auto goal = f("~K{a} p_a_1");
  std::vector<Formula> premises{f("~B{a} p_a_1")};
  CHECK(derivation_goal(premises, goal) == f("~B{a} p_a_1 -> ~K{a} p_a_1"));
  CHECK(derivation_goal({}, goal) == goal);
  CHECK(check_derivation(System::EDL, premises, goal, contrapositive()).ok());
  auto r = check_derivation(System::EDL, {}, goal, contrapositive());
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == ProofError::Kind::goal_mismatch);
}

TEST_CASE("checking is deterministic") {
  auto steps = contrapositive();
  steps[2].by = ModusPonens{2, 1};
  auto x = check_proof(System::EDL, steps), y = check_proof(System::EDL, steps);
  CHECK(x.error->reason == y.error->reason);
}

}
