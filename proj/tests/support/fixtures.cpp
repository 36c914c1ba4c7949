#include "fixtures.hpp"

#include <stdexcept>

#include "hyperdox/io/json.hpp"

namespace fixtures {

std::filesystem::path dir() { return HYPERDOX_FIXTURE_DIR; }

std::filesystem::path path(const std::string& name) { return dir() / name; }

hyperdox::HypergraphModel hypergraph(const std::string& name) {
  return hyperdox::hypergraph_from_json(hyperdox::read_json_file(path(name)));
}

hyperdox::KripkeModel kripke(const std::string& name) {
  return hyperdox::kripke_from_json(hyperdox::read_json_file(path(name)));
}

std::size_t edge(const hyperdox::HypergraphModel& m, const std::string& name) {
  auto e = m.find_edge(name);
  if (!e) throw std::runtime_error("fixture has no edge " + name);
  return *e;
}

}  // namespace fixtures
