#pragma once

#include <filesystem>
#include <string>

#include "hyperdox/hypergraph/model.hpp"
#include "hyperdox/kripke/model.hpp"

namespace fixtures {

std::filesystem::path dir();
std::filesystem::path path(const std::string& name);

hyperdox::HypergraphModel hypergraph(const std::string& name);
hyperdox::KripkeModel kripke(const std::string& name);

/// Edge index by name; aborts the test on a missing name.
std::size_t edge(const hyperdox::HypergraphModel& m, const std::string& name);

}  // namespace fixtures
