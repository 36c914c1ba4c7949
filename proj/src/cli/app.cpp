#include "hyperdox/cli/app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>

#include "hyperdox/convert/conversion.hpp"
#include "hyperdox/convert/equivalence.hpp"
#include "hyperdox/convert/formula_enum.hpp"
#include "hyperdox/error.hpp"
#include "hyperdox/hypergraph/complex.hpp"
#include "hyperdox/hypergraph/metrics.hpp"
#include "hyperdox/hypergraph/satisfaction.hpp"
#include "hyperdox/io/json.hpp"
#include "hyperdox/kripke/satisfaction.hpp"
#include "hyperdox/logic/parser.hpp"
#include "hyperdox/proofcheck/checker.hpp"
#include "hyperdox/search/countermodel.hpp"
#include "hyperdox/search/soundness.hpp"

namespace hyperdox::cli {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw Error(ErrorKind::input, "bad value '" + std::string(s) + "' for " + std::string(what));
  }
  return v;
}

SearchBounds parse_bounds(const std::string& text) {
  SearchBounds b;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::input, "bounds entries read key=value");
    auto key = item.substr(0, eq);
    auto value = parse_count(item.substr(eq + 1), key);
    if (key == "agents") {
      b.n_agents = value;
    } else if (key == "edges") {
      b.max_edges = value;
    } else if (key == "vars") {
      b.vars_per_agent = value;
    } else if (key == "vertices") {
      b.max_vertices_per_agent = value;
    } else {
      throw Error(ErrorKind::input, "unknown bound '" + std::string(key) + "'");
    }
  }
  if (b.n_agents == 0 || b.max_edges == 0) throw Error(ErrorKind::input, "agents and edges bounds must be positive");
  return b;
}

ModelClass class_arg(const std::string& name) {
  auto c = parse_model_class(name);
  if (!c) throw Error(ErrorKind::input, "unknown class '" + name + "' (expected H_su, H_sut or all)");
  return *c;
}

void print_report(std::ostream& out, const ClassReport& r, const Workspace& ws) {
  if (r.kripke) {
    const auto& k = *r.kripke;
    out << "model: kripke\n"
        << "local: " << yes_no(k.local) << "\nproper: " << yes_no(k.proper) << "\nserial: " << yes_no(k.serial)
        << "\ntransitive: " << yes_no(k.transitive) << "\neuclidean: " << yes_no(k.euclidean)
        << "\nin_K_te: " << yes_no(k.in_k_te) << "\nin_K_ste: " << yes_no(k.in_k_ste) << '\n';
    for (std::size_t a = 0; a < k.agents.size(); ++a) {
      const auto& f = k.agents[a];
      out << "agent " << ws.agent_name(AgentId{a}) << ": serial=" << yes_no(f.serial)
          << " transitive=" << yes_no(f.transitive) << " euclidean=" << yes_no(f.euclidean) << '\n';
    }
  }
  if (r.hypergraph) {
    const auto& h = *r.hypergraph;
    out << "model: hypergraph\n"
        << "rank: " << h.rank << '\n'
        << ws.agent_count() << "-uniform: " << yes_no(h.n_uniform) << "\nsimple: " << yes_no(h.simple)
        << "\ntail_complete: " << yes_no(h.tail_complete) << "\nin_H_su: " << yes_no(h.in_h_su)
        << "\nin_H_sut: " << yes_no(h.in_h_sut) << '\n';
  }
  for (const auto& e : r.evidence) out << "evidence: " << e << '\n';
}

ClassReport classify(const LoadedModel& m) {
  if (auto k = std::get_if<KripkeModel>(&m)) return model_properties(*k);
  return graph_metrics(std::get<HypergraphModel>(m));
}

struct Options {
  bool json = false;
  std::string model, state, formula, in, out, cert, kripke, hyper, proof;
  std::string direction;
  std::string cls = "H_su", system, bounds = "agents=1,edges=2,vars=1";
  std::size_t depth = 2, size = 5, workers = 1;
  std::uint64_t seed = 0;
};

int cmd_validate(const Options& o, std::ostream& out) {
  auto m = load_model(o.model);
  const auto& ws = workspace_of(m);
  auto report = classify(m);
  if (o.json) {
    out << to_json(report, ws).dump(2) << '\n';
  } else {
    print_report(out, report, ws);
  }
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
  auto m = load_model(o.model);
  const auto& ws = workspace_of(m);
  auto f = parse_formula(o.formula, ws);
  bool value = false;
  if (auto k = std::get_if<KripkeModel>(&m)) {
    auto w = k->find_world(o.state);
    if (!w) throw Error(ErrorKind::input, "unknown world '" + o.state + "'");
    value = satisfies_k(*k, *w, f);
  } else {
    const auto& h = std::get<HypergraphModel>(m);
    auto e = h.find_edge(o.state);
    if (!e) throw Error(ErrorKind::input, "unknown edge '" + o.state + "'");
    value = satisfies_h(h, *e, f);
  }
  if (o.json) {
    out << Json{{"state", o.state}, {"formula", render_formula(f, ws)}, {"value", value}}.dump(2) << '\n';
  } else {
    out << yes_no(value) << '\n';
  }
  return value ? 0 : 1;
}

std::string default_cert_path(const std::string& out) {
  std::filesystem::path p(out);
  return (p.parent_path() / (p.stem().string() + ".cert.json")).string();
}

int cmd_convert(const Options& o, std::ostream& out) {
  auto m = load_model(o.in);
  const auto cert_path = o.cert.empty() ? default_cert_path(o.out) : o.cert;
  Json model, cert;
  if (o.direction == "k2h") {
    auto k = std::get_if<KripkeModel>(&m);
    if (!k) throw Error(ErrorKind::input, "k2h needs a kripke model");
    auto r = kripke_to_hypergraph(*k);
    model = to_json(r.model);
    cert = to_json(r.certificate, k->workspace());
  } else if (o.direction == "h2k") {
    auto h = std::get_if<HypergraphModel>(&m);
    if (!h) throw Error(ErrorKind::input, "h2k needs a hypergraph model");
    auto r = hypergraph_to_kripke(*h);
    model = to_json(r.model);
    cert = to_json(r.certificate, h->workspace());
  } else {
    throw Error(ErrorKind::input, "direction must be k2h or h2k");
  }
  write_json_file(o.out, model);
  write_json_file(cert_path, cert);
  if (o.json) {
    out << cert.dump(2) << '\n';
  } else {
    out << "model: " << o.out << "\ncertificate: " << cert_path << "\ninjective: " << yes_no(cert["injective"].get<bool>())
        << '\n';
  }
  return 0;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  auto mk = kripke_from_json(read_json_file(o.kripke));
  auto mh = hypergraph_from_json(read_json_file(o.hyper));
  if (!(mk.workspace() == mh.workspace())) throw Error(ErrorKind::workspace, "the two models declare different workspaces");
  auto cert = certificate_from_json(read_json_file(o.cert));

  std::vector<std::size_t> edge_of_world(mk.world_count(), mh.edge_count());
  for (const auto& [from, to] : cert.map) {
    const auto& world = cert.direction == Direction::kripke_to_hypergraph ? from : to;
    const auto& edge = cert.direction == Direction::kripke_to_hypergraph ? to : from;
    auto w = mk.find_world(world);
    auto e = mh.find_edge(edge);
    if (!w || !e) throw Error(ErrorKind::input, "certificate pairs unknown states '" + from + "' and '" + to + "'");
    edge_of_world[*w] = *e;
  }
  for (std::size_t w = 0; w < mk.world_count(); ++w) {
    if (edge_of_world[w] == mh.edge_count()) {
      throw Error(ErrorKind::input, "certificate does not map world '" + mk.world_name(w) + "'");
    }
  }

  const auto& ws = mk.workspace();
  bool serial = model_properties(mk).kripke->in_k_ste && graph_metrics(mh).hypergraph->in_h_sut;
  auto formulas = enumerate_formulas(ws.all_vars(), ws.agents(), o.depth, o.size, serial);
  auto report = check_modal_equivalence(mk, mh, edge_of_world, formulas);
  if (o.json) {
    out << to_json(report, mk, mh, formulas).dump(2) << '\n';
  } else {
    out << "language: " << (serial ? "epistemic-doxastic" : "doxastic") << "\nformulas: " << formulas.size()
        << "\nchecked: " << report.rows.size() << "\ndisagreements: " << report.disagreements << '\n';
    for (const auto& row : report.rows) {
      if (row.agree()) continue;
      out << "  " << mk.world_name(row.world) << " / " << mh.edge(row.edge).name << ": "
          << render_formula(formulas[row.formula], ws) << " kripke=" << yes_no(row.kripke_value)
          << " hypergraph=" << yes_no(row.hypergraph_value) << '\n';
    }
  }
  return report.all_agree ? 0 : 1;
}

int cmd_prove(const Options& o, std::ostream& out) {
  auto doc = proof_from_json(read_json_file(o.proof));
  auto result = check_proof(doc.system, doc.steps);
  if (o.json) {
    out << to_json(result, doc.steps.size()).dump(2) << '\n';
  } else if (result.ok()) {
    out << "ok: " << doc.steps.size() << " steps checked in " << to_string(doc.system) << '\n';
  } else {
    out << "error at step " << result.error->step << ": " << result.error->reason << '\n';
  }
  return result.ok() ? 0 : 1;
}

int cmd_countermodel(const Options& o, std::ostream& out) {
  auto b = parse_bounds(o.bounds);
  b.seed = o.seed;
  auto cls = class_arg(o.cls);
  const auto ws = search_workspace(b);
  auto f = parse_formula(o.formula, ws);
  auto r = countermodel(cls, f, b, o.workers);
  if (o.json) {
    out << to_json(r, cls, f).dump(2) << '\n';
  } else if (r.witness) {
    out << "countermodel: edge " << r.witness->model.edge(r.witness->edge).name << " after " << r.models_visited
        << " models\n"
        << to_json(r.witness->model).dump(2) << '\n';
  } else {
    out << "no countermodel within bounds (" << r.models_visited << " models)\n";
  }
  return r.witness ? 1 : 0;
}

int cmd_soundness(const Options& o, std::ostream& out) {
  auto b = parse_bounds(o.bounds);
  b.seed = o.seed;
  auto sys = parse_system(o.system);
  if (!sys) throw Error(ErrorKind::input, "unknown system '" + o.system + "'");
  auto cls = o.cls.empty() ? intended_class(*sys) : class_arg(o.cls);
  auto r = soundness_suite(*sys, cls, b, o.depth, o.size, o.workers);
  const auto ws = search_workspace(b);
  if (o.json) {
    out << to_json(r, ws).dump(2) << '\n';
  } else {
    out << to_string(r.system) << " over " << to_string(r.model_class) << ": " << r.instances << " instances, "
        << r.models_visited << " models, " << r.violations.size() << " violations\n";
    for (const auto& v : r.violations) {
      out << "  " << to_string(v.scheme) << ": " << render_formula(v.instance, ws) << " fails at e" << v.edge + 1
          << " of model " << v.model_index + 1 << '\n';
    }
  }
  return r.violations.empty() ? 0 : 1;
}

int cmd_complex(const Options& o, std::ostream& out) {
  auto m = load_model(o.model);
  auto h = std::get_if<HypergraphModel>(&m);
  if (!h) throw Error(ErrorKind::input, "complex needs a hypergraph model");
  auto facets = induced_complex(*h);
  if (o.json) {
    out << to_json(facets, *h).dump(2) << '\n';
    return 0;
  }
  out << "facets: " << facets.size() << '\n';
  for (const auto& f : facets) {
    out << "{";
    for (std::size_t i = 0; i < f.vertices.size(); ++i) out << (i ? "," : "") << h->vertex(f.vertices[i]).id;
    out << "} from";
    for (auto e : f.edges) out << ' ' << h->edge(e).name;
    out << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hypergraph and Kripke semantics for doxastic logics", "hyperdox"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* validate = app.add_subcommand("validate", "Validate and classify a model");
  validate->add_option("model", o.model)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a formula at a world or edge");
  eval->add_option("model", o.model)->required();
  eval->add_option("state", o.state)->required();
  eval->add_option("formula", o.formula)->required();

  auto* convert = app.add_subcommand("convert", "Convert between Kripke and hypergraph models");
  convert->add_option("direction", o.direction)->required()->check(CLI::IsMember({"k2h", "h2k"}));
  convert->add_option("in", o.in)->required();
  convert->add_option("out", o.out)->required();
  convert->add_option("--cert", o.cert, "Certificate path (default <out stem>.cert.json)");

  auto* equiv = app.add_subcommand("equiv", "Check modal equivalence along a certificate");
  equiv->add_option("kripke", o.kripke)->required();
  equiv->add_option("hyper", o.hyper)->required();
  equiv->add_option("cert", o.cert)->required();
  equiv->add_option("--depth", o.depth, "Maximal modal depth")->capture_default_str();
  equiv->add_option("--size", o.size, "Maximal formula size")->capture_default_str();

  auto* prove = app.add_subcommand("prove", "Check a Hilbert-style proof");
  prove->add_option("proof", o.proof)->required();

  auto* search = app.add_subcommand("search", "Bounded model search");
  search->require_subcommand(1);
  search->fallthrough();
  auto* cm = search->add_subcommand("countermodel", "Find a model falsifying a formula");
  cm->add_option("--class", o.cls)->capture_default_str();
  cm->add_option("--formula", o.formula)->required();
  cm->add_option("--bounds", o.bounds, "agents=A,edges=E,vars=V[,vertices=K]")->capture_default_str();
  cm->add_option("--workers", o.workers)->capture_default_str();
  cm->add_option("--seed", o.seed)->capture_default_str();
  auto* sound = search->add_subcommand("soundness", "Check every scheme instance over a model class");
  sound->add_option("--system", o.system)->required()->check(CLI::IsMember({"EDL", "LocKD45", "LocK45"}));
  sound->add_option("--class", o.cls, "Default: the class matching the system");
  sound->add_option("--depth", o.depth, "Modal depth of metaformulas")->capture_default_str();
  sound->add_option("--size", o.size, "Size of metaformulas");
  sound->add_option("--bounds", o.bounds)->capture_default_str();
  sound->add_option("--workers", o.workers)->capture_default_str();
  sound->add_option("--seed", o.seed)->capture_default_str();

  auto* complex = app.add_subcommand("complex", "List the facets of the induced simplicial complex");
  complex->add_option("model", o.model)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json(ErrorKind::input, e.what()).dump() << '\n';
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (convert->parsed()) return cmd_convert(o, out);
    if (equiv->parsed()) return cmd_equiv(o, out);
    if (prove->parsed()) return cmd_prove(o, out);
    if (cm->parsed()) return cmd_countermodel(o, out);
    if (sound->parsed()) {
      if (sound->count("--class") == 0) o.cls.clear();
      if (sound->count("--size") == 0) o.size = 3;
      if (sound->count("--depth") == 0) o.depth = 1;
      return cmd_soundness(o, out);
    }
    if (complex->parsed()) return cmd_complex(o, out);
  } catch (const Error& e) {
    err << error_json(e.kind(), e.what()).dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << error_json(ErrorKind::input, e.what()).dump() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hyperdox::cli
