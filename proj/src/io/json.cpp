#include "hyperdox/io/json.hpp"

#include <fstream>
#include <set>

#include "hyperdox/error.hpp"
#include "hyperdox/logic/parser.hpp"

namespace hyperdox {

namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorKind::input, message); }

void allow_keys(const Json& j, std::initializer_list<std::string_view> keys, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) bad("unknown key '" + k + "' in " + where);
  }
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bad(where + " lacks \"" + key + "\"");
  return *it;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> texts(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(text(x, where));
  return out;
}

std::size_t index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) bad(where + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Json atom_names(const Workspace& ws, const std::vector<PropVar>& vars) {
  Json out = Json::array();
  for (auto p : vars) out.push_back(ws.var_name(p));
  return out;
}

void expect_kind(const Json& j, const std::string& kind) {
  auto k = text(field(j, "kind", "model"), "\"kind\"");
  if (k != kind) bad("expected a " + kind + " model, found kind '" + k + "'");
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Workspace workspace_from_json(const Json& j) {
  auto agents = texts(field(j, "agents", "workspace"), "\"agents\"");
  std::vector<std::vector<std::string>> vars(agents.size());
  if (auto it = j.find("vars"); it != j.end()) {
    if (!it->is_object()) bad("\"vars\" must map agents to variable lists");
    for (const auto& [agent, list] : it->items()) {
      auto pos = std::find(agents.begin(), agents.end(), agent);
      if (pos == agents.end()) throw Error(ErrorKind::workspace, "\"vars\" names undeclared agent '" + agent + "'");
      vars[pos - agents.begin()] = texts(list, "\"vars\"");
    }
  }
  Workspace ws(std::move(agents), std::move(vars));
  if (!ws.bottom_atom()) {
    throw Error(ErrorKind::workspace, "the first agent must declare a variable (it fixes the atom behind false)");
  }
  return ws;
}

void write_workspace(Json& j, const Workspace& ws) {
  j["agents"] = Json::array();
  Json vars = Json::object();
  for (auto a : ws.agents()) {
    j["agents"].push_back(ws.agent_name(a));
    Json list = Json::array();
    for (const auto& v : ws.var_names(a)) list.push_back(v);
    vars[ws.agent_name(a)] = list;
  }
  j["vars"] = vars;
}

KripkeModel kripke_from_json(const Json& j) {
  allow_keys(j, {"kind", "agents", "vars", "worlds", "belief", "valuation"}, "kripke model");
  expect_kind(j, "kripke");
  auto ws = workspace_from_json(j);
  auto worlds = texts(field(j, "worlds", "kripke model"), "\"worlds\"");
  auto world_index = [&](const Json& x) {
    auto name = text(x, "world reference");
    auto it = std::find(worlds.begin(), worlds.end(), name);
    if (it == worlds.end()) throw Error(ErrorKind::validation, "relation references unknown world '" + name + "'");
    return static_cast<std::size_t>(it - worlds.begin());
  };

  const auto& belief = field(j, "belief", "kripke model");
  if (!belief.is_object()) bad("\"belief\" must map agents to pair lists");
  for (const auto& [agent, pairs] : belief.items()) {
    if (!ws.find_agent(agent)) throw Error(ErrorKind::undeclared_agent, "\"belief\" names undeclared agent '" + agent + "'");
  }
  std::vector<Relation> relations;
  for (auto a : ws.agents()) {
    auto it = belief.find(ws.agent_name(a));
    if (it == belief.end()) bad("\"belief\" lacks agent '" + ws.agent_name(a) + "'");
    if (!it->is_array()) bad("belief relation of '" + ws.agent_name(a) + "' must be an array of pairs");
    std::vector<Relation::Pair> pairs;
    for (const auto& pr : *it) {
      if (!pr.is_array() || pr.size() != 2) bad("belief pairs must be two-element arrays");
      pairs.emplace_back(world_index(pr[0]), world_index(pr[1]));
    }
    relations.emplace_back(worlds.size(), std::move(pairs));
  }

  std::vector<std::vector<PropVar>> valuation(worlds.size());
  if (auto it = j.find("valuation"); it != j.end()) {
    if (!it->is_object()) bad("\"valuation\" must map worlds to atom lists");
    for (const auto& [world, atoms] : it->items()) {
      auto w = world_index(Json(world));
      for (const auto& name : texts(atoms, "\"valuation\"")) {
        auto p = ws.find_var(name);
        if (!p) throw Error(ErrorKind::undeclared_atom, "valuation of '" + world + "' uses undeclared atom '" + name + "'");
        valuation[w].push_back(*p);
      }
    }
  }
  return KripkeModel(std::move(ws), std::move(worlds), std::move(relations), std::move(valuation));
}

Json to_json(const KripkeModel& m) {
  const auto& ws = m.workspace();
  Json j;
  j["kind"] = "kripke";
  write_workspace(j, ws);
  j["worlds"] = m.world_names();
  Json belief = Json::object();
  for (auto a : ws.agents()) {
    Json pairs = Json::array();
    for (auto [u, v] : m.belief(a).pairs()) pairs.push_back({m.world_name(u), m.world_name(v)});
    belief[ws.agent_name(a)] = pairs;
  }
  j["belief"] = belief;
  Json valuation = Json::object();
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    valuation[m.world_name(w)] = atom_names(ws, m.valuation(w));
  }
  j["valuation"] = valuation;
  return j;
}

RawHypergraph raw_hypergraph_from_json(const Json& j) {
  allow_keys(j, {"kind", "agents", "vars", "vertices", "edges"}, "hypergraph model");
  expect_kind(j, "hypergraph");
  RawHypergraph raw{workspace_from_json(j), {}, {}};
  const auto& vertices = field(j, "vertices", "hypergraph model");
  if (!vertices.is_array()) bad("\"vertices\" must be an array");
  for (const auto& v : vertices) {
    allow_keys(v, {"id", "color", "atoms"}, "vertex");
    RawVertex rv{text(field(v, "id", "vertex"), "vertex id"), text(field(v, "color", "vertex"), "vertex color"), {}};
    if (auto it = v.find("atoms"); it != v.end()) rv.atoms = texts(*it, "vertex atoms");
    raw.vertices.push_back(std::move(rv));
  }
  const auto& edges = field(j, "edges", "hypergraph model");
  if (!edges.is_array()) bad("\"edges\" must be an array");
  for (const auto& e : edges) {
    allow_keys(e, {"name", "tail", "head"}, "edge");
    RawEdge re;
    if (auto it = e.find("name"); it != e.end()) re.name = text(*it, "edge name");
    if (auto it = e.find("tail"); it != e.end()) re.tail = texts(*it, "edge tail");
    if (auto it = e.find("head"); it != e.end()) re.head = texts(*it, "edge head");
    raw.edges.push_back(std::move(re));
  }
  return raw;
}

HypergraphModel hypergraph_from_json(const Json& j) { return validate_model(raw_hypergraph_from_json(j)); }

Json to_json(const HypergraphModel& m) {
  const auto& ws = m.workspace();
  Json j;
  j["kind"] = "hypergraph";
  write_workspace(j, ws);
  j["vertices"] = Json::array();
  for (const auto& v : m.vertices()) {
    j["vertices"].push_back({{"id", v.id}, {"color", ws.agent_name(v.color)}, {"atoms", atom_names(ws, v.atoms)}});
  }
  j["edges"] = Json::array();
  for (const auto& e : m.edges()) {
    Json tail = Json::array(), head = Json::array();
    for (auto u : e.tail) tail.push_back(m.vertex(u).id);
    for (auto u : e.head) head.push_back(m.vertex(u).id);
    j["edges"].push_back({{"name", e.name}, {"tail", tail}, {"head", head}});
  }
  return j;
}

LoadedModel model_from_json(const Json& j) {
  if (!j.is_object()) bad("model file must hold an object");
  auto kind = text(field(j, "kind", "model"), "\"kind\"");
  if (kind == "kripke") return kripke_from_json(j);
  if (kind == "hypergraph") return hypergraph_from_json(j);
  bad("unknown model kind '" + kind + "'");
}

LoadedModel load_model(const std::filesystem::path& path) { return model_from_json(read_json_file(path)); }

const Workspace& workspace_of(const LoadedModel& m) {
  return std::visit([](const auto& x) -> const Workspace& { return x.workspace(); }, m);
}

Json to_json(const ClassReport& r, const Workspace& ws) {
  Json j = Json::object();
  if (r.kripke) {
    const auto& k = *r.kripke;
    Json agents = Json::object();
    for (std::size_t a = 0; a < k.agents.size(); ++a) {
      agents[ws.agent_name(AgentId{a})] = {
          {"serial", k.agents[a].serial}, {"transitive", k.agents[a].transitive}, {"euclidean", k.agents[a].euclidean}};
    }
    j["kripke"] = {{"local", k.local},           {"proper", k.proper},         {"serial", k.serial},
                   {"transitive", k.transitive}, {"euclidean", k.euclidean},   {"in_K_te", k.in_k_te},
                   {"in_K_ste", k.in_k_ste},     {"agents", agents}};
  }
  if (r.hypergraph) {
    const auto& h = *r.hypergraph;
    j["hypergraph"] = {{"rank", h.rank},
                       {"n_uniform", h.n_uniform},
                       {"simple", h.simple},
                       {"tail_complete", h.tail_complete},
                       {"in_H_su", h.in_h_su},
                       {"in_H_sut", h.in_h_sut}};
  }
  j["evidence"] = r.evidence;
  return j;
}

Json to_json(const ConversionCertificate& c, const Workspace& ws) {
  Json map = Json::object();
  for (const auto& [from, to] : c.map) map[from] = to;
  return {{"direction", to_string(c.direction)},
          {"map", map},
          {"injective", c.injective},
          {"class_before", to_json(c.class_before, ws)},
          {"class_after", to_json(c.class_after, ws)}};
}

ConversionCertificate certificate_from_json(const Json& j) {
  allow_keys(j, {"direction", "map", "injective", "class_before", "class_after"}, "certificate");
  ConversionCertificate c;
  auto dir = text(field(j, "direction", "certificate"), "\"direction\"");
  if (dir == "k2h") {
    c.direction = Direction::kripke_to_hypergraph;
  } else if (dir == "h2k") {
    c.direction = Direction::hypergraph_to_kripke;
  } else {
    bad("unknown certificate direction '" + dir + "'");
  }
  const auto& map = field(j, "map", "certificate");
  if (!map.is_object()) bad("\"map\" must be an object");
  std::set<std::string> targets;
  for (const auto& [from, to] : map.items()) {
    c.map.emplace_back(from, text(to, "map target"));
    targets.insert(c.map.back().second);
  }
  c.injective = targets.size() == c.map.size();
  return c;
}

namespace {

Justification justification_from_json(const Json& by, const Workspace& ws, std::size_t step) {
  const auto where = "justification of step " + std::to_string(step);
  if (by.is_string()) {
    if (by.get<std::string>() == "tautology") return TautologyRule{};
    bad("unknown " + where + ": '" + by.get<std::string>() + "'");
  }
  if (!by.is_object() || by.size() != 1) bad(where + " must be \"tautology\" or a one-key object");
  const std::string key = by.begin().key();
  const Json& value = by.begin().value();
  if (key == "axiom") {
    auto name = text(value, where);
    auto s = parse_scheme(name);
    if (!s) bad("unknown scheme '" + name + "' in " + where);
    return AxiomRule{*s};
  }
  if (key == "mp") {
    if (!value.is_array() || value.size() != 2) bad(where + ": \"mp\" takes two step numbers");
    return ModusPonens{index(value[0], where), index(value[1], where)};
  }
  if (key == "nec_k" || key == "nec_b") {
    allow_keys(value, {"agent", "step"}, where);
    auto name = text(field(value, "agent", where), where);
    auto a = ws.find_agent(name);
    if (!a) throw Error(ErrorKind::undeclared_agent, where + " names undeclared agent '" + name + "'");
    auto mod = key == "nec_k" ? Necessitation::Modality::knowledge : Necessitation::Modality::belief;
    return Necessitation{mod, *a, index(field(value, "step", where), where)};
  }
  bad("unknown rule '" + key + "' in " + where);
}

}  // namespace

ProofDocument proof_from_json(const Json& j) {
  allow_keys(j, {"agents", "vars", "system", "steps"}, "proof");
  auto ws = workspace_from_json(j);
  auto name = text(field(j, "system", "proof"), "\"system\"");
  auto sys = parse_system(name);
  if (!sys) bad("unknown system '" + name + "'");
  const auto& steps = field(j, "steps", "proof");
  if (!steps.is_array()) bad("\"steps\" must be an array");
  std::vector<ProofStep> out;
  for (const auto& s : steps) {
    const auto n = out.size() + 1;
    allow_keys(s, {"formula", "by"}, "proof step");
    auto src = text(field(s, "formula", "proof step"), "step formula");
    Formula f = [&] {
      try {
        return parse_formula(src, ws);
      } catch (const Error& e) {
        throw Error(e.kind(), "step " + std::to_string(n) + ": " + e.what());
      }
    }();
    out.push_back({f, justification_from_json(field(s, "by", "proof step"), ws, n)});
  }
  return {std::move(ws), *sys, std::move(out)};
}

Json to_json(const ProofResult& r, std::size_t steps) {
  if (r.ok()) return {{"ok", true}, {"steps", steps}};
  return {{"ok", false}, {"step", r.error->step}, {"kind", to_string(r.error->kind)}, {"reason", r.error->reason}};
}

Json to_json(const SearchResult& r, ModelClass cls, const Formula& f) {
  Json j;
  j["class"] = to_string(cls);
  if (r.witness) {
    j["formula"] = render_formula(f, r.witness->model.workspace());
    j["outcome"] = "countermodel";
  } else {
    j["outcome"] = "exhausted";
  }
  j["models_visited"] = r.models_visited;
  j["elapsed_ms"] = r.elapsed.count();
  if (r.witness) {
    j["witness"] = {{"edge", r.witness->model.edge(r.witness->edge).name}, {"model", to_json(r.witness->model)}};
  }
  return j;
}

Json to_json(const SoundnessReport& r, const Workspace& ws) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"scheme", to_string(v.scheme)},
                          {"formula", render_formula(v.instance, ws)},
                          {"model", v.model_index + 1},
                          {"edge", "e" + std::to_string(v.edge + 1)}});
  }
  return {{"system", to_string(r.system)},
          {"class", to_string(r.model_class)},
          {"instances", r.instances},
          {"violations", violations},
          {"models_visited", r.models_visited},
          {"elapsed_ms", r.elapsed.count()}};
}

Json to_json(const EquivalenceReport& r, const KripkeModel& mk, const HypergraphModel& mh,
             const std::vector<Formula>& formulas) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    if (row.agree()) continue;
    rows.push_back({{"world", mk.world_name(row.world)},
                    {"edge", mh.edge(row.edge).name},
                    {"formula", render_formula(formulas[row.formula], mk.workspace())},
                    {"kripke", row.kripke_value},
                    {"hypergraph", row.hypergraph_value}});
  }
  return {{"all_agree", r.all_agree}, {"checked", r.rows.size()}, {"formulas", formulas.size()}, {"disagreements", rows}};
}

Json to_json(const std::vector<Facet>& facets, const HypergraphModel& m) {
  Json list = Json::array();
  for (const auto& f : facets) {
    Json vs = Json::array(), es = Json::array();
    for (auto u : f.vertices) vs.push_back(m.vertex(u).id);
    for (auto e : f.edges) es.push_back(m.edge(e).name);
    list.push_back({{"vertices", vs}, {"edges", es}});
  }
  return {{"facets", list}};
}

Json error_json(ErrorKind kind, const std::string& message) {
  return {{"error", {{"kind", to_string(kind)}, {"message", message}}}};
}

}  // namespace hyperdox
