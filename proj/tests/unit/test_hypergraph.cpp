#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "hyperdox/hypergraph/complex.hpp"
#include "hyperdox/hypergraph/metrics.hpp"
#include "hyperdox/hypergraph/satisfaction.hpp"
#include "hyperdox/logic/parser.hpp"
#include "oracles.hpp"

using namespace hyperdox;

namespace {

std::vector<Violation::Kind> kinds(const RawHypergraph& raw) {
  std::vector<Violation::Kind> out;
  for (const auto& v : find_violations(raw)) out.push_back(v.kind);
  return out;
}

bool has(const std::vector<Violation::Kind>& ks, Violation::Kind k) {
  return std::find(ks.begin(), ks.end(), k) != ks.end();
}

RawHypergraph one_edge(std::vector<RawVertex> vertices, RawEdge edge) {
  return {Workspace({"a", "b"}, {{"p_a_1"}, {"p_b_1"}}), std::move(vertices), {std::move(edge)}};
}

}  // namespace

TEST_SUITE("hypergraph") {

TEST_CASE("validation names every violation") {
  using K = Violation::Kind;
  auto chromatic = one_edge({{"u", "a", {}}, {"v", "a", {}}}, {std::nullopt, {"u"}, {"v"}});
  CHECK(has(kinds(chromatic), K::non_chromatic));

  auto mismatch = one_edge({{"u", "a", {"p_b_1"}}}, {std::nullopt, {"u"}, {}});
  CHECK(has(kinds(mismatch), K::atom_color_mismatch));

  auto overlap = one_edge({{"u", "a", {}}}, {std::string("x"), {"u"}, {"u"}});
  auto vs = find_violations(overlap);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == K::tail_head_overlap);
  CHECK(vs[0].subject == "x");

  auto dangling = one_edge({{"u", "a", {}}}, {std::nullopt, {"u"}, {"w"}});
  CHECK(has(kinds(dangling), K::dangling_vertex));

  auto unknown = one_edge({{"u", "z", {}}}, {std::nullopt, {"u"}, {}});
  CHECK(has(kinds(unknown), K::unknown_color));

  auto duplicate = one_edge({{"u", "a", {}}, {"u", "b", {}}}, {std::nullopt, {"u"}, {}});
  CHECK(has(kinds(duplicate), K::duplicate_vertex));

  CHECK_THROWS_AS(validate_model(chromatic), ValidationError);
  try {
    validate_model(overlap);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("x") != std::string::npos);
  }
}

TEST_CASE("unnamed edges are called e1..eN in file order") {
  RawHypergraph raw{Workspace::standard(1, 1), {{"u", "a", {}}}, {{std::nullopt, {"u"}, {}}, {std::nullopt, {}, {"u"}}}};
  auto m = validate_model(raw);
  CHECK(m.edge(0).name == "e1");
  CHECK(m.edge(1).name == "e2");
}

TEST_CASE("drawn fixtures validate") {
  CHECK_NOTHROW(fixtures::hypergraph("c_undecided.json"));
  CHECK_NOTHROW(fixtures::hypergraph("belief_chain.json"));
  CHECK_NOTHROW(fixtures::hypergraph("five_worlds_h.json"));
}

TEST_CASE("metrics of the belief chain and five-world graphs") {
  for (const char* name : {"belief_chain.json", "five_worlds_h.json"}) {
    auto f = *graph_metrics(fixtures::hypergraph(name)).hypergraph;
    CHECK(f.rank == 3);
    CHECK(f.n_uniform);
    CHECK(f.simple);
    CHECK(f.tail_complete);
    CHECK(f.in_h_sut);
  }
  auto undecided = *graph_metrics(fixtures::hypergraph("c_undecided.json")).hypergraph;
  CHECK(undecided.n_uniform);
  CHECK_FALSE(undecided.tail_complete);
}

TEST_CASE("metrics of a single edge with its only vertex in the tail") {
  HypergraphModel m(Workspace::standard(1, 0), {{"u", AgentId{0}, {}}}, {{"e1", {0}, {}}});
  auto f = *graph_metrics(m).hypergraph;
  CHECK(f.rank == 1);
  CHECK(f.n_uniform);
  CHECK(f.simple);
  CHECK(f.tail_complete);
}

TEST_CASE("structurally equal edges are not simple") {
  HypergraphModel m(Workspace::standard(1, 0), {{"u", AgentId{0}, {}}}, {{"e1", {0}, {}}, {"e2", {0}, {}}});
  CHECK_FALSE(graph_metrics(m).hypergraph->simple);
}

TEST_CASE("belief chain doxastic accessibility of agent a") {
  auto m = fixtures::hypergraph("belief_chain.json");
  auto r = accessibility(m, AgentId{0}, AccessKind::doxastic);
  auto e2 = fixtures::edge(m, "e2"), e3 = fixtures::edge(m, "e3");
  CHECK(r.contains(e2, e3));
  CHECK(r.contains(e3, e3));
  CHECK_FALSE(r.contains(e2, e2));
  CHECK_FALSE(r.contains(e3, e2));
}

TEST_CASE("undecided c accessibility") {
  auto m = fixtures::hypergraph("c_undecided.json");
  auto e1 = fixtures::edge(m, "e1"), e2 = fixtures::edge(m, "e2");
  auto a = accessibility(m, AgentId{0}, AccessKind::doxastic);
  auto c = accessibility(m, AgentId{2}, AccessKind::doxastic);
  CHECK(a.contains(e1, e2));
  CHECK_FALSE(a.contains(e1, e1));
  CHECK_FALSE(a.contains(e2, e1));
  CHECK(c.contains(e1, e1));
}

TEST_CASE("accessibility matches the definition on random graphs") {
  auto ws = Workspace::standard(3, 1);
  testgen::Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    auto m = testgen::random_hypergraph(rng, ws, 5, 3);
    for (auto a : ws.agents()) {
      auto b = accessibility(m, a, AccessKind::doxastic);
      auto k = accessibility(m, a, AccessKind::epistemic);
      for (std::size_t x = 0; x < m.edge_count(); ++x) {
        for (std::size_t y = 0; y < m.edge_count(); ++y) {
          CHECK(b.contains(x, y) == oracle::doxastic_step(m, a, x, y));
          CHECK(k.contains(x, y) == oracle::epistemic_step(m, a, x, y));
        }
      }
      CHECK(b.is_subset_of(k));
    }
  }
}

TEST_CASE("an isolated edge is only epistemically related to itself") {
  HypergraphModel m(Workspace::standard(2, 0), {{"a1", AgentId{0}, {}}, {"b1", AgentId{1}, {}}, {"a2", AgentId{0}, {}},
                                                {"b2", AgentId{1}, {}}},
                    {{"e1", {0}, {1}}, {"e2", {2, 3}, {}}});
  for (auto a : m.workspace().agents()) {
    CHECK(accessibility(m, a, AccessKind::epistemic) == Relation::identity(2));
  }
}

TEST_CASE("edge atoms are the union of vertex atoms") {
  auto ws = Workspace::standard(2, 1);
  PropVar pa{AgentId{0}, 0}, pb{AgentId{1}, 0};
  HypergraphModel m(ws, {{"a1", AgentId{0}, {pa}}, {"b1", AgentId{1}, {pb}}, {"b2", AgentId{1}, {}}},
                    {{"e1", {0}, {1}}, {"e2", {2}, {}}});
  CHECK(edge_atoms(m, 0) == std::vector<PropVar>{pa, pb});
  CHECK(edge_atoms(m, 1).empty());

  testgen::Rng rng(31);
  auto ws3 = Workspace::standard(3, 2);
  for (int i = 0; i < 100; ++i) {
    auto g = testgen::random_hypergraph(rng, ws3, 4, 3);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      for (auto p : edge_atoms(g, e)) {
        auto u = g.vertex_of(e, p.owner);
        REQUIRE(u);
        const auto& atoms = g.vertex(*u).atoms;
        CHECK(std::find(atoms.begin(), atoms.end(), p) != atoms.end());
      }
    }
  }
}

TEST_CASE("belief chain with p_c_1 on both c-vertices") {
  auto m = fixtures::hypergraph("belief_chain.json");
  const auto& ws = m.workspace();
  auto e2 = fixtures::edge(m, "e2");
  CHECK(satisfies_h(m, e2, parse_formula("B{a} p_c_1", ws)));
  CHECK(satisfies_h(m, e2, parse_formula("p_c_1 & ~B{a} false", ws)));
  HypergraphEvaluator eval(m);
  testgen::Rng rng(37);
  for (int i = 0; i < 300; ++i) {
    auto f = testgen::random_formula(rng, ws, {3, 10, true});
    for (std::size_t e = 0; e < m.edge_count(); ++e) CHECK(eval.satisfies(e, f) == oracle::satisfies_h(m, e, f));
  }
}

TEST_CASE("belief in falsum holds where the agent's vertex is in no tail") {
  auto m = fixtures::hypergraph("c_undecided.json");
  auto f = parse_formula("B{a} false", m.workspace());
  CHECK(satisfies_h(m, fixtures::edge(m, "e2"), f) == false);
  // a2 lies in the tail of e2, so from e1 agent a still has a successor.
  CHECK_FALSE(satisfies_h(m, fixtures::edge(m, "e1"), f));
  HypergraphModel lonely(Workspace::standard(1, 1), {{"u", AgentId{0}, {}}}, {{"e1", {}, {0}}});
  CHECK(satisfies_h(lonely, 0, parse_formula("B{a} false", lonely.workspace())));
}

TEST_CASE("evaluator agrees with the cache-free oracle on random graphs") {
  auto ws = Workspace::standard(2, 2);
  testgen::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    auto m = testgen::random_hypergraph(rng, ws, 4, 2);
    HypergraphEvaluator eval(m);
    for (int j = 0; j < 8; ++j) {
      auto f = testgen::random_formula(rng, ws, {2, 9, true});
      auto t = eval.truth_set(f);
      for (std::size_t e = 0; e < m.edge_count(); ++e) CHECK((t[e] != 0) == oracle::satisfies_h(m, e, f));
    }
  }
}

TEST_CASE("D_B holds on random H^sut models") {
  auto ws = Workspace::standard(2, 1);
  testgen::Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    auto m = testgen::random_h_su(rng, ws, 4, 2, true);
    HypergraphEvaluator eval(m);
    auto phi = testgen::random_formula(rng, ws, {1, 5, true});
    auto a = AgentId{testgen::uniform(rng, 0, 1)};
    auto d = implication(Formula::belief(a, phi), Formula::negation(Formula::belief(a, Formula::negation(phi))));
    CHECK(eval.valid(d));
  }
}

TEST_CASE("accessibility frame properties on uniform graphs") {
  testgen::Rng rng(47);
  for (int i = 0; i < 300; ++i) {
    auto ws = Workspace::standard(testgen::uniform(rng, 1, 3), 0);
    auto m = testgen::random_uniform_hypergraph(rng, ws, 5, 3);
    bool tail_complete = graph_metrics(m).hypergraph->tail_complete;
    for (auto a : ws.agents()) {
      auto b = oracle::to_matrix(accessibility(m, a, AccessKind::doxastic));
      auto k = oracle::to_matrix(accessibility(m, a, AccessKind::epistemic));
      CHECK(oracle::transitive(b));
      CHECK(oracle::euclidean(b));
      if (tail_complete) CHECK(oracle::serial(b));
      CHECK(oracle::reflexive(k));
      CHECK(oracle::symmetric(k));
      CHECK(oracle::transitive(k));
    }
  }
}

TEST_CASE("induced complex facets") {
  auto shared = fixtures::hypergraph("shared_face.json");
  auto facets = induced_complex(shared);
  REQUIRE(facets.size() == 2);
  CHECK(facets[0].vertices.size() == 3);
  CHECK(facets[1].vertices.size() == 3);

  auto ws = Workspace::standard(2, 0);
  HypergraphModel nested(ws, {{"a1", AgentId{0}, {}}, {"b1", AgentId{1}, {}}}, {{"e1", {0}, {}}, {"e2", {0}, {1}}});
  auto f = induced_complex(nested);
  REQUIRE(f.size() == 1);
  CHECK(f[0].edges == std::vector<std::size_t>{1});

  testgen::Rng rng(53);
  auto ws3 = Workspace::standard(3, 0);
  for (int i = 0; i < 100; ++i) {
    auto m = testgen::random_h_su(rng, ws3, 5, 3, false);
    auto facets3 = induced_complex(m);
    CHECK(facets3.size() == m.edge_count());
    for (const auto& x : facets3) CHECK(x.vertices.size() == 3);
  }
}

TEST_CASE("induced complex against a brute-force maximality scan") {
  auto ws = Workspace::standard(3, 0);
  testgen::Rng rng(59);
  for (int i = 0; i < 100; ++i) {
    auto m = testgen::random_hypergraph(rng, ws, 5, 2);
    std::vector<std::vector<std::size_t>> sets;
    for (std::size_t e = 0; e < m.edge_count(); ++e) {
      std::vector<std::size_t> s(m.edge(e).tail);
      s.insert(s.end(), m.edge(e).head.begin(), m.edge(e).head.end());
      std::sort(s.begin(), s.end());
      sets.push_back(s);
    }
    std::vector<std::vector<std::size_t>> maximal;
    for (const auto& s : sets) {
      bool dominated = false;
      for (const auto& t : sets)
        if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) dominated = true;
      if (!dominated && std::find(maximal.begin(), maximal.end(), s) == maximal.end()) maximal.push_back(s);
    }
    auto facets = induced_complex(m);
    REQUIRE(facets.size() == maximal.size());
    for (std::size_t k = 0; k < facets.size(); ++k) CHECK(facets[k].vertices == maximal[k]);
  }
}

}
