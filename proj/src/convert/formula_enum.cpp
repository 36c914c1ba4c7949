#include "hyperdox/convert/formula_enum.hpp"

namespace hyperdox {

std::vector<Formula> enumerate_formulas(const std::vector<PropVar>& vars, const std::vector<AgentId>& agents,
                                        std::size_t max_depth, std::size_t max_size, bool include_knowledge) {
  // by_size[s]: all admissible formulas with exactly s nodes.
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  if (max_size >= 1)
    for (auto p : vars) by_size[1].push_back(Formula::atom(p));

  for (std::size_t s = 2; s <= max_size; ++s) {
    auto& level = by_size[s];
    for (const auto& f : by_size[s - 1]) level.push_back(Formula::negation(f));
    for (std::size_t l = 1; l + 1 < s; ++l) {
      for (const auto& x : by_size[l])
        for (const auto& y : by_size[s - 1 - l]) level.push_back(Formula::conjunction(x, y));
    }
    for (auto a : agents)
      for (const auto& f : by_size[s - 1])
        if (f.modal_depth() < max_depth) level.push_back(Formula::belief(a, f));
    if (include_knowledge) {
      for (auto a : agents)
        for (const auto& f : by_size[s - 1])
          if (f.modal_depth() < max_depth) level.push_back(Formula::knowledge(a, f));
    }
  }

  std::vector<Formula> out;
  for (auto& level : by_size) out.insert(out.end(), level.begin(), level.end());
  return out;
}

}  // namespace hyperdox
