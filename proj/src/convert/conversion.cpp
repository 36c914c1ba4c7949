#include "hyperdox/convert/conversion.hpp"

#include <algorithm>
#include <map>

#include "hyperdox/error.hpp"
#include "hyperdox/hypergraph/metrics.hpp"
#include "hyperdox/hypergraph/satisfaction.hpp"

namespace hyperdox {

std::string_view to_string(Direction d) {
  return d == Direction::kripke_to_hypergraph ? "k2h" : "h2k";
}

HypergraphConversion kripke_to_hypergraph(const KripkeModel& m) {
  auto before = model_properties(m);
  if (!before.kripke->local) {
    std::string why = "conversion requires a local model";
    for (const auto& line : before.evidence)
      if (line.starts_with("not local")) why += ": " + line;
    throw Error(ErrorKind::precondition, why);
  }

  const auto& ws = m.workspace();
  const auto worlds = m.world_count();
  std::vector<Vertex> vertices;
  // vertex_at[a][w]: vertex index of the a-class of world w.
  std::vector<std::vector<std::size_t>> vertex_at;
  for (auto a : ws.agents()) {
    auto label = equivalence_classes(m.belief(a));
    std::size_t classes = 0;
    for (auto l : label) classes = std::max(classes, l + 1);
    std::vector<std::vector<std::size_t>> members(classes);
    for (std::size_t w = 0; w < worlds; ++w) members[label[w]].push_back(w);

    const auto base = vertices.size();
    for (const auto& cls : members) {
      std::string id = ws.agent_name(a) + ":{";
      for (std::size_t i = 0; i < cls.size(); ++i) {
        if (i) id += ",";
        id += m.world_name(cls[i]);
      }
      id += "}";
      vertices.push_back({std::move(id), a, m.local_valuation(cls.front(), a)});
    }
    std::vector<std::size_t> at(worlds);
    for (std::size_t w = 0; w < worlds; ++w) at[w] = base + label[w];
    vertex_at.push_back(std::move(at));
  }

  std::vector<DirectedEdge> edges;
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t> seen;
  std::vector<std::size_t> edge_of_world;
  for (std::size_t u = 0; u < worlds; ++u) {
    DirectedEdge e;
    for (auto a : ws.agents()) {
      auto v = vertex_at[a.index][u];
      (m.belief(a).contains(u, u) ? e.tail : e.head).push_back(v);
    }
    auto key = std::make_pair(e.tail, e.head);
    auto [it, fresh] = seen.emplace(std::move(key), edges.size());
    if (fresh) {
      e.name = "e" + std::to_string(edges.size() + 1);
      edges.push_back(std::move(e));
    }
    edge_of_world.push_back(it->second);
  }

  HypergraphModel out(ws, std::move(vertices), std::move(edges));
  ConversionCertificate cert;
  cert.direction = Direction::kripke_to_hypergraph;
  for (std::size_t u = 0; u < worlds; ++u) cert.map.emplace_back(m.world_name(u), out.edge(edge_of_world[u]).name);
  cert.injective = out.edge_count() == worlds;
  cert.class_before = std::move(before);
  cert.class_after = graph_metrics(out);
  return {std::move(out), std::move(edge_of_world), std::move(cert)};
}

KripkeConversion hypergraph_to_kripke(const HypergraphModel& m) {
  const auto& ws = m.workspace();
  std::vector<std::string> worlds;
  std::vector<std::vector<PropVar>> valuation;
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    worlds.push_back(m.edge(e).name);
    valuation.push_back(m.edge_atoms(e));
  }
  std::vector<Relation> belief;
  for (auto a : ws.agents()) belief.push_back(accessibility(m, a, AccessKind::doxastic));

  KripkeModel out(ws, std::move(worlds), std::move(belief), std::move(valuation));
  ConversionCertificate cert;
  cert.direction = Direction::hypergraph_to_kripke;
  std::vector<std::size_t> identity(m.edge_count());
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    identity[e] = e;
    cert.map.emplace_back(m.edge(e).name, m.edge(e).name);
  }
  cert.injective = true;
  cert.class_before = graph_metrics(m);
  cert.class_after = model_properties(out);
  return {std::move(out), std::move(identity), std::move(cert)};
}

}  // namespace hyperdox
