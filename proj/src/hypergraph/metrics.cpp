#include "hyperdox/hypergraph/metrics.hpp"

#include <algorithm>

namespace hyperdox {

namespace {

std::string set_text(const HypergraphModel& m, const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += m.vertex(s[i]).id;
  }
  return out + "}";
}

}  // namespace

ClassReport graph_metrics(const HypergraphModel& m) {
  ClassReport report;
  HypergraphClassFlags f;
  const auto n = m.workspace().agent_count();
  const auto edges = m.edge_count();

  f.n_uniform = true;
  for (std::size_t e = 0; e < edges; ++e) {
    const auto size = m.undirected(e).size();
    f.rank = std::max(f.rank, size);
    if (size != n && f.n_uniform) {
      f.n_uniform = false;
      report.evidence.push_back("edge " + m.edge(e).name + " has " + std::to_string(size) + " vertices, not " +
                                std::to_string(n));
    }
  }

  f.simple = true;
  for (std::size_t x = 0; x < edges && f.simple; ++x) {
    for (std::size_t y = 0; y < edges; ++y) {
      if (x == y) continue;
      const auto& ex = m.undirected(x);
      const auto& ey = m.undirected(y);
      if (std::includes(ey.begin(), ey.end(), ex.begin(), ex.end())) {
        f.simple = false;
        report.evidence.push_back("edge " + m.edge(x).name + " " + set_text(m, ex) + " is contained in edge " +
                                  m.edge(y).name + " " + set_text(m, ey));
        break;
      }
    }
  }

  std::vector<char> in_tail(m.vertex_count(), 0);
  for (const auto& e : m.edges())
    for (auto u : e.tail) in_tail[u] = 1;
  f.tail_complete = true;
  for (std::size_t u = 0; u < m.vertex_count(); ++u) {
    if (!in_tail[u]) {
      f.tail_complete = false;
      report.evidence.push_back("vertex " + m.vertex(u).id + " is in no tail");
      break;
    }
  }

  f.in_h_su = f.simple && f.n_uniform;
  f.in_h_sut = f.in_h_su && f.tail_complete;
  report.hypergraph = f;
  return report;
}

}  // namespace hyperdox
