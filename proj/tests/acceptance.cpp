// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "hyperdox/convert/conversion.hpp"
#include "hyperdox/convert/formula_enum.hpp"
#include "hyperdox/hypergraph/metrics.hpp"
#include "hyperdox/hypergraph/satisfaction.hpp"
#include "hyperdox/io/json.hpp"
#include "hyperdox/kripke/relation.hpp"
#include "hyperdox/kripke/satisfaction.hpp"
#include "hyperdox/logic/parser.hpp"
#include "hyperdox/proofcheck/checker.hpp"
#include "hyperdox/search/countermodel.hpp"
#include "hyperdox/search/soundness.hpp"

using namespace hyperdox;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool pass = r.ok && secs < limit_s;
  if (!pass) ++failures;
  std::printf("criterion %2d: %s  %-34s %8.3f s (limit %g s)%s%s\n", id, pass ? "PASS" : "FAIL", title, secs, limit_s,
              r.detail.empty() ? "" : "  ", r.detail.c_str());
  std::fflush(stdout);
}

bool related(const HypergraphModel& m, const char* agent, const char* from, const char* to) {
  auto a = *m.workspace().find_agent(agent);
  return accessibility(m, a, AccessKind::doxastic).contains(fixtures::edge(m, from), fixtures::edge(m, to));
}

// Edge as (tail, head) of vertex names.
using NamedEdge = std::pair<std::set<std::string>, std::set<std::string>>;

// True iff some color-preserving renaming of the vertices of `m` turns its
// edges, in order, into `want`.
bool matches_up_to_renaming(const HypergraphModel& m, const std::vector<NamedEdge>& want) {
  if (m.edge_count() != want.size()) return false;
  const auto n = m.workspace().agent_count();
  std::vector<std::vector<std::size_t>> own(n);
  for (std::size_t u = 0; u < m.vertex_count(); ++u) own[m.vertex(u).color.index].push_back(u);
  std::vector<std::vector<std::string>> names(n);
  for (const auto& [t, h] : want)
    for (const auto* side : {&t, &h})
      for (const auto& v : *side) {
        auto a = m.workspace().find_agent(v.substr(0, 1));
        if (!a) return false;
        auto& bucket = names[a->index];
        if (std::find(bucket.begin(), bucket.end(), v) == bucket.end()) bucket.push_back(v);
      }
  for (std::size_t a = 0; a < n; ++a) {
    if (own[a].size() != names[a].size()) return false;
    std::sort(names[a].begin(), names[a].end());
  }
  std::vector<std::string> label(m.vertex_count());
  std::function<bool(std::size_t)> go = [&](std::size_t a) {
    if (a == n) {
      for (std::size_t e = 0; e < m.edge_count(); ++e) {
        NamedEdge got;
        for (auto u : m.edge(e).tail) got.first.insert(label[u]);
        for (auto u : m.edge(e).head) got.second.insert(label[u]);
        if (got != want[e]) return false;
      }
      return true;
    }
    do {
      for (std::size_t i = 0; i < own[a].size(); ++i) label[own[a][i]] = names[a][i];
      if (go(a + 1)) return true;
    } while (std::next_permutation(names[a].begin(), names[a].end()));
    return false;
  };
  return go(0);
}

std::vector<Formula> two_atom_formulas(const Workspace& ws, std::size_t depth, std::size_t size) {
  std::vector<AgentId> agents;
  for (std::size_t a = 0; a < ws.agent_count(); ++a) agents.push_back(AgentId{a});
  return enumerate_formulas(ws.all_vars(), agents, depth, size, true);
}

}  // namespace

int main() {
  criterion(1, "belief chain accessibility", 1, [] {
    auto m = fixtures::hypergraph("belief_chain.json");
    bool ok = related(m, "a", "e2", "e3") && related(m, "a", "e3", "e3") && !related(m, "a", "e2", "e2") &&
              !related(m, "a", "e3", "e2");
    ok = ok && satisfies_h(m, fixtures::edge(m, "e2"), parse_formula("B{a} p_c_1", m.workspace()));
    return Outcome{ok, ok ? "" : "relation differs"};
  });

  criterion(2, "undecided c accessibility", 1, [] {
    auto m = fixtures::hypergraph("c_undecided.json");
    bool ok = related(m, "c", "e1", "e1") && related(m, "a", "e1", "e2") && !related(m, "a", "e1", "e1") &&
              !related(m, "a", "e2", "e1");
    return Outcome{ok, ok ? "" : "relation differs"};
  });

  criterion(3, "five-world frame to hypergraph", 1, [] {
    auto k = fixtures::kripke("five_worlds_k.json");
    auto conv = kripke_to_hypergraph(k);
    const auto& h = conv.model;
    std::vector<NamedEdge> want{
        {{"b1"}, {"a2", "c1"}}, {{"a1", "b2", "c1"}, {}}, {{"b2", "c1"}, {"a2"}},
        {{"a2", "b3", "c2"}, {}}, {{"a3"}, {"b2", "c2"}},
    };
    // Edge i must be the image of world w(i+1).
    bool ordered = true;
    for (std::size_t w = 0; w < k.world_count(); ++w) ordered = ordered && conv.edge_of_world[w] == w;
    auto metrics = *graph_metrics(h).hypergraph;
    bool ok = h.vertex_count() == 8 && h.edge_count() == 5 && ordered && matches_up_to_renaming(h, want) &&
              metrics.simple && metrics.n_uniform && metrics.rank == 3 && metrics.tail_complete;
    auto fixture = fixtures::hypergraph("five_worlds_h.json");
    ok = ok && matches_up_to_renaming(fixture, want);
    return Outcome{ok, "vertices=" + std::to_string(h.vertex_count()) + " edges=" + std::to_string(h.edge_count())};
  });

  criterion(4, "frame properties of uniform models", 30, [] {
    testgen::Rng rng(4);
    std::size_t models = 0, tail_complete = 0, bad = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto ws = Workspace::standard(n, 1);
      for (int i = 0; i < 400; ++i) {
        auto m = testgen::random_uniform_hypergraph(rng, ws, 5, 3);
        ++models;
        bool complete = graph_metrics(m).hypergraph->tail_complete;
        tail_complete += complete;
        for (std::size_t a = 0; a < n; ++a) {
          auto b = oracle::to_matrix(accessibility(m, AgentId{a}, AccessKind::doxastic));
          auto k = oracle::to_matrix(accessibility(m, AgentId{a}, AccessKind::epistemic));
          for (std::size_t x = 0; x < m.edge_count(); ++x)
            for (std::size_t y = 0; y < m.edge_count(); ++y)
              if (b[x][y] != oracle::doxastic_step(m, AgentId{a}, x, y) ||
                  k[x][y] != oracle::epistemic_step(m, AgentId{a}, x, y))
                ++bad;
          if (!oracle::transitive(b) || !oracle::euclidean(b)) ++bad;
          if (complete && !oracle::serial(b)) ++bad;
          if (!oracle::reflexive(k) || !oracle::symmetric(k) || !oracle::transitive(k)) ++bad;
        }
      }
    }
    return Outcome{bad == 0 && models >= 1000 && tail_complete > 0,
                   "models=" + std::to_string(models) + " tail_complete=" + std::to_string(tail_complete) +
                       " violations=" + std::to_string(bad)};
  });

  criterion(5, "soundness suites at depth 1", 300, [] {
    SearchBounds b;
    b.n_agents = 2;
    b.max_edges = 2;
    b.vars_per_agent = 1;
    std::size_t violations = 0;
    std::string detail;
    for (auto sys : {System::LocK45, System::LocKD45, System::EDL}) {
      auto r = soundness_suite(sys, intended_class(sys), b, 1, 3, 4);
      violations += r.violations.size();
      detail += std::string(to_string(sys)) + ":" + std::to_string(r.instances) + "x" +
                std::to_string(r.models_visited) + " ";
    }
    return Outcome{violations == 0, detail + "violations=" + std::to_string(violations)};
  });

  criterion(6, "D_B separates H_su from H_sut", 60, [] {
    SearchBounds small;
    small.n_agents = 1;
    small.max_edges = 2;
    small.vars_per_agent = 1;
    auto d = parse_formula("~B{a} (p_a_1 & ~p_a_1)", search_workspace(small));
    auto found = countermodel(ModelClass::h_su, d, small);
    bool ok = found.witness && !satisfies_h(found.witness->model, found.witness->edge, d);
    SearchBounds wide;
    wide.n_agents = 2;
    wide.max_edges = 3;
    wide.vars_per_agent = 1;
    auto none = countermodel(ModelClass::h_sut, parse_formula("~B{a} (p_a_1 & ~p_a_1)", search_workspace(wide)), wide, 4);
    // A non-theorem of the doxastic systems, for contrast.
    auto t = countermodel(ModelClass::h_sut, parse_formula("B{a} p_b_1 -> p_b_1", search_workspace(wide)), wide, 4);
    ok = ok && none.exhausted() && t.witness;
    return Outcome{ok, "H_su witness after " + std::to_string(found.models_visited) + ", H_sut exhausted " +
                           std::to_string(none.models_visited)};
  });

  criterion(7, "modal equivalence under both maps", 300, [] {
    testgen::Rng rng(7);
    auto ws = Workspace::standard(2, 1);
    auto formulas = two_atom_formulas(ws, 2, 6);
    std::size_t disagreements = 0, checks = 0;
    for (int i = 0; i < 100; ++i) {
      auto k = testgen::random_kripke_te_retry(rng, ws, 6, true);
      auto conv = kripke_to_hypergraph(k);
      KripkeEvaluator ek(k);
      HypergraphEvaluator eh(conv.model);
      for (const auto& f : formulas) {
        auto tk = ek.truth_set(f);
        auto th = eh.truth_set(f);
        for (std::size_t w = 0; w < k.world_count(); ++w, ++checks)
          if (tk[w] != th[conv.edge_of_world[w]]) ++disagreements;
      }
    }
    for (int i = 0; i < 100; ++i) {
      auto h = testgen::random_h_su(rng, ws, 5, 3, true);
      auto conv = hypergraph_to_kripke(h);
      KripkeEvaluator ek(conv.model);
      HypergraphEvaluator eh(h);
      for (const auto& f : formulas) {
        auto tk = ek.truth_set(f);
        auto th = eh.truth_set(f);
        for (std::size_t e = 0; e < h.edge_count(); ++e, ++checks)
          if (th[e] != tk[conv.world_of_edge[e]]) ++disagreements;
      }
    }
    return Outcome{disagreements == 0, "formulas=" + std::to_string(formulas.size()) + " checks=" +
                                           std::to_string(checks) + " disagreements=" + std::to_string(disagreements)};
  });

  criterion(8, "local veracity of belief", 120, [] {
    testgen::Rng rng(8);
    auto ws = Workspace::standard(2, 2);
    testgen::FormulaShape shape{2, 10, true};
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
      bool serial = i < 500;
      auto m = testgen::random_kripke_te_retry(rng, ws, 6, serial);
      AgentId a{testgen::uniform(rng, 0, 1)};
      auto f = testgen::random_agent_formula(rng, ws, a, shape);
      auto r = check_local_veracity(m, a, f);
      auto bf = Formula::belief(a, f);
      bool oracle_imp = true, oracle_bic = true;
      for (std::size_t w = 0; w < m.world_count(); ++w) {
        bool x = oracle::satisfies_k(m, w, f), y = oracle::satisfies_k(m, w, bf);
        oracle_imp = oracle_imp && (!x || y);
        oracle_bic = oracle_bic && x == y;
      }
      if (!r.implication_valid || !oracle_imp) ++bad;
      if (serial && (!r.biconditional_valid || !*r.biconditional_valid || !oracle_bic)) ++bad;
    }
    return Outcome{bad == 0, "violations=" + std::to_string(bad)};
  });

  criterion(9, "closure against Warshall", 10, [] {
    testgen::Rng rng(9);
    std::size_t bad = 0;
    for (int i = 0; i < 10000; ++i) {
      auto n = testgen::uniform(rng, 1, 6);
      auto r = testgen::random_relation(rng, n, 0.05 + 0.05 * static_cast<double>(i % 8));
      if (oracle::to_matrix(generated_equivalence(r)) != oracle::warshall_equivalence(r)) ++bad;
    }
    return Outcome{bad == 0, "disagreements=" + std::to_string(bad)};
  });

  criterion(10, "proof checker and mutations", 1, [] {
    auto load = [](const char* name) { return proof_from_json(read_json_file(fixtures::path(name))); };
    auto good = load("proofs/edl_contrapositive.json");
    bool ok = check_proof(good.system, good.steps).ok() && good.steps.size() == 3;
    const std::vector<std::pair<const char*, std::size_t>> mutants{
        {"proofs/wrong_scheme.json", 1},   {"proofs/swapped_mp.json", 3},   {"proofs/altered_formula.json", 1},
        {"proofs/nec_b_in_edl.json", 3},   {"proofs/out_of_range.json", 3}, {"proofs/fragment_breach.json", 1},
    };
    std::string detail;
    for (const auto& [name, step] : mutants) {
      auto doc = load(name);
      auto r = check_proof(doc.system, doc.steps);
      bool hit = r.error && r.error->step == step;
      ok = ok && hit;
      detail += std::to_string(r.error ? r.error->step : 0) + " ";
    }
    return Outcome{ok, "rejected at steps " + detail};
  });

  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
