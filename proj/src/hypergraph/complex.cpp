#include "hyperdox/hypergraph/complex.hpp"

#include <algorithm>

namespace hyperdox {

std::vector<Facet> induced_complex(const HypergraphModel& m) {
  std::vector<Facet> facets;
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    const auto& s = m.undirected(e);
    bool maximal = true;
    for (std::size_t other = 0; other < m.edge_count() && maximal; ++other) {
      const auto& t = m.undirected(other);
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) maximal = false;
    }
    if (!maximal) continue;
    auto it = std::find_if(facets.begin(), facets.end(), [&](const Facet& f) { return f.vertices == s; });
    if (it == facets.end()) {
      facets.push_back({s, {e}});
    } else {
      it->edges.push_back(e);
    }
  }
  return facets;
}

}  // namespace hyperdox
