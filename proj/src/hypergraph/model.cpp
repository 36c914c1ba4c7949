#include "hyperdox/hypergraph/model.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace hyperdox {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::string edge_label(const DirectedEdge& e, std::size_t index) {
  return e.name.empty() ? "e" + std::to_string(index + 1) : e.name;
}

std::vector<Violation> structural_violations(const Workspace& ws, const std::vector<Vertex>& vertices,
                                             const std::vector<DirectedEdge>& edges) {
  std::vector<Violation> out;
  using K = Violation::Kind;
  if (vertices.empty()) out.push_back({K::no_vertices, "", "model has no vertices"});

  std::unordered_set<std::string> ids;
  for (const auto& v : vertices) {
    if (!ids.insert(v.id).second) out.push_back({K::duplicate_vertex, v.id, "duplicate vertex id '" + v.id + "'"});
    if (v.color.index >= ws.agent_count()) {
      out.push_back({K::unknown_color, v.id, "vertex '" + v.id + "' has an undeclared color"});
      continue;
    }
    for (auto p : v.atoms) {
      if (!ws.declares(p)) {
        out.push_back({K::undeclared_atom, v.id, "vertex '" + v.id + "' carries an undeclared atom"});
      } else if (p.owner != v.color) {
        out.push_back({K::atom_color_mismatch, v.id,
                       "vertex '" + v.id + "' colored " + ws.agent_name(v.color) + " carries atom " +
                           ws.var_name(p) + " of agent " + ws.agent_name(p.owner)});
      }
    }
  }

  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const auto label = edge_label(e, i);
    if (!names.insert(label).second) {
      out.push_back({K::duplicate_edge_name, label, "duplicate edge name '" + label + "'"});
    }
    std::vector<std::size_t> all;
    bool dangling = false;
    for (const auto* side : {&e.tail, &e.head}) {
      for (auto u : *side) {
        if (u >= vertices.size()) {
          out.push_back({K::dangling_vertex, label, "edge " + label + " references a missing vertex"});
          dangling = true;
        } else {
          all.push_back(u);
        }
      }
    }
    if (dangling) continue;
    for (auto u : e.tail) {
      if (std::find(e.head.begin(), e.head.end(), u) != e.head.end()) {
        out.push_back({K::tail_head_overlap, label,
                       "edge " + label + " has vertex '" + vertices[u].id + "' in both tail and head"});
      }
    }
    for (const auto* side : {&e.tail, &e.head}) {
      auto s = *side;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        out.push_back({K::repeated_vertex, label, "edge " + label + " lists a vertex twice on one side"});
      }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::size_t x = 0; x < all.size(); ++x) {
      for (std::size_t y = x + 1; y < all.size(); ++y) {
        const auto& u = vertices[all[x]];
        const auto& v = vertices[all[y]];
        if (u.color == v.color) {
          out.push_back({K::non_chromatic, label,
                         "edge " + label + " contains vertices '" + u.id + "' and '" + v.id + "' of the same color"});
        }
      }
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Violation::Kind kind) {
  using K = Violation::Kind;
  switch (kind) {
    case K::no_vertices: return "no_vertices";
    case K::duplicate_vertex: return "duplicate_vertex";
    case K::unknown_color: return "unknown_color";
    case K::undeclared_atom: return "undeclared_atom";
    case K::atom_color_mismatch: return "atom_color_mismatch";
    case K::dangling_vertex: return "dangling_vertex";
    case K::repeated_vertex: return "repeated_vertex";
    case K::tail_head_overlap: return "tail_head_overlap";
    case K::non_chromatic: return "non_chromatic";
    case K::duplicate_edge_name: return "duplicate_edge_name";
  }
  return "unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& v) {
  std::string msg = "invalid hypergraph model";
  for (const auto& x : v) msg += "; " + x.message;
  return msg;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorKind::validation, summarize(violations)), violations_(std::move(violations)) {}

HypergraphModel::HypergraphModel(Workspace ws, std::vector<Vertex> vertices, std::vector<DirectedEdge> edges)
    : ws_(std::move(ws)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (auto bad = structural_violations(ws_, vertices_, edges_); !bad.empty()) throw ValidationError(std::move(bad));

  const auto n = ws_.agent_count();
  for (auto& v : vertices_) {
    std::sort(v.atoms.begin(), v.atoms.end());
    v.atoms.erase(std::unique(v.atoms.begin(), v.atoms.end()), v.atoms.end());
  }
  slot_.assign(edges_.size() * n, npos);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.name.empty()) e.name = edge_label(e, i);
    std::sort(e.tail.begin(), e.tail.end());
    std::sort(e.head.begin(), e.head.end());
    std::vector<std::size_t> all(e.tail);
    all.insert(all.end(), e.head.begin(), e.head.end());
    std::sort(all.begin(), all.end());
    std::vector<PropVar> atoms;
    for (auto u : all) {
      slot_[i * n + vertices_[u].color.index] = u;
      atoms.insert(atoms.end(), vertices_[u].atoms.begin(), vertices_[u].atoms.end());
    }
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    undirected_.push_back(std::move(all));
    edge_atoms_.push_back(std::move(atoms));
  }
}

std::optional<std::size_t> HypergraphModel::vertex_of(std::size_t e, AgentId a) const {
  auto u = slot_.at(e * ws_.agent_count() + a.index);
  if (u == npos) return std::nullopt;
  return u;
}

bool HypergraphModel::in_tail(std::size_t e, std::size_t u) const {
  const auto& t = edges_.at(e).tail;
  return std::binary_search(t.begin(), t.end(), u);
}

bool HypergraphModel::holds(std::size_t e, PropVar p) const {
  const auto& a = edge_atoms_.at(e);
  return std::binary_search(a.begin(), a.end(), p);
}

std::optional<std::size_t> HypergraphModel::find_edge(std::string_view name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> HypergraphModel::find_vertex(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

namespace {

struct Resolved {
  std::vector<Vertex> vertices;
  std::vector<DirectedEdge> edges;
  std::vector<Violation> violations;
};

Resolved resolve(const RawHypergraph& raw) {
  using K = Violation::Kind;
  Resolved r;
  const auto& ws = raw.workspace;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& rv : raw.vertices) {
    // An unresolved color keeps an out-of-range index and is reported by the structural pass.
    Vertex v{rv.id, AgentId{ws.agent_count()}, {}};
    if (auto a = ws.find_agent(rv.color)) v.color = *a;
    for (const auto& name : rv.atoms) {
      if (auto p = ws.find_var(name)) {
        v.atoms.push_back(*p);
      } else {
        r.violations.push_back({K::undeclared_atom, rv.id, "vertex '" + rv.id + "' carries undeclared atom '" + name + "'"});
      }
    }
    index.emplace(rv.id, r.vertices.size());
    r.vertices.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const auto& re = raw.edges[i];
    DirectedEdge e;
    e.name = re.name.value_or("e" + std::to_string(i + 1));
    auto lookup = [&](const std::vector<std::string>& ids, std::vector<std::size_t>& out) {
      for (const auto& id : ids) {
        auto it = index.find(id);
        if (it == index.end()) {
          r.violations.push_back({K::dangling_vertex, e.name, "edge " + e.name + " references missing vertex '" + id + "'"});
        } else {
          out.push_back(it->second);
        }
      }
    };
    lookup(re.tail, e.tail);
    lookup(re.head, e.head);
    r.edges.push_back(std::move(e));
  }
  return r;
}

}  // namespace

std::vector<Violation> find_violations(const RawHypergraph& raw) {
  auto r = resolve(raw);
  auto more = structural_violations(raw.workspace, r.vertices, r.edges);
  r.violations.insert(r.violations.end(), more.begin(), more.end());
  return r.violations;
}

HypergraphModel validate_model(const RawHypergraph& raw) {
  auto r = resolve(raw);
  if (!r.violations.empty()) {
    auto more = structural_violations(raw.workspace, r.vertices, r.edges);
    r.violations.insert(r.violations.end(), more.begin(), more.end());
    throw ValidationError(std::move(r.violations));
  }
  return HypergraphModel(raw.workspace, std::move(r.vertices), std::move(r.edges));
}

std::vector<PropVar> edge_atoms(const HypergraphModel& m, std::size_t e) { return m.edge_atoms(e); }

}  // namespace hyperdox
