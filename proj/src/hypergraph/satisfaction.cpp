#include "hyperdox/hypergraph/satisfaction.hpp"

#include <algorithm>

#include "hyperdox/error.hpp"

namespace hyperdox {

Relation accessibility(const HypergraphModel& m, AgentId a, AccessKind kind) {
  const auto n = m.edge_count();
  std::vector<Relation::Pair> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    auto u = m.vertex_of(x, a);
    if (!u) continue;
    for (std::size_t y = 0; y < n; ++y) {
      bool linked = kind == AccessKind::doxastic ? m.in_tail(y, *u) : m.vertex_of(y, a) == u;
      if (linked) pairs.emplace_back(x, y);
    }
  }
  return Relation(n, std::move(pairs));
}

HypergraphEvaluator::HypergraphEvaluator(const HypergraphModel& m) : m_(m) {
  for (auto a : m.workspace().agents()) {
    doxastic_.push_back(accessibility(m, a, AccessKind::doxastic));
    epistemic_.push_back(accessibility(m, a, AccessKind::epistemic));
  }
}

const Relation& HypergraphEvaluator::relation(AgentId a, AccessKind kind) const {
  return kind == AccessKind::doxastic ? doxastic_.at(a.index) : epistemic_.at(a.index);
}

std::vector<char> HypergraphEvaluator::truth_set(const Formula& f) const {
  const auto n = m_.edge_count();
  std::vector<char> out(n);
  auto box = [&](const Relation& rel) {
    auto sub = truth_set(f.operand());
    for (std::size_t e = 0; e < n; ++e) {
      auto s = rel.successors(e);
      out[e] = std::all_of(s.begin(), s.end(), [&](std::size_t v) { return sub[v] != 0; });
    }
  };
  switch (f.kind()) {
    case Connective::atom:
      for (std::size_t e = 0; e < n; ++e) out[e] = m_.holds(e, f.var());
      break;
    case Connective::negation: {
      auto sub = truth_set(f.operand());
      for (std::size_t e = 0; e < n; ++e) out[e] = !sub[e];
      break;
    }
    case Connective::conjunction: {
      auto l = truth_set(f.left());
      auto r = truth_set(f.right());
      for (std::size_t e = 0; e < n; ++e) out[e] = l[e] && r[e];
      break;
    }
    case Connective::belief:
      box(relation(f.agent(), AccessKind::doxastic));
      break;
    case Connective::knowledge:
      box(relation(f.agent(), AccessKind::epistemic));
      break;
  }
  return out;
}

bool HypergraphEvaluator::satisfies(std::size_t e, const Formula& f) const {
  if (e >= m_.edge_count()) throw Error(ErrorKind::input, "edge index out of range");
  return truth_set(f)[e] != 0;
}

bool HypergraphEvaluator::valid(const Formula& f) const {
  auto t = truth_set(f);
  return std::all_of(t.begin(), t.end(), [](char c) { return c != 0; });
}

bool satisfies_h(const HypergraphModel& m, std::size_t e, const Formula& f) {
  return HypergraphEvaluator(m).satisfies(e, f);
}

}  // namespace hyperdox
