#include "hyperdox/search/soundness.hpp"

#include <algorithm>
#include <thread>

#include "hyperdox/convert/formula_enum.hpp"
#include "hyperdox/error.hpp"
#include "hyperdox/hypergraph/satisfaction.hpp"

namespace hyperdox {

ModelClass intended_class(System sys) { return sys == System::LocK45 ? ModelClass::h_su : ModelClass::h_sut; }

std::vector<std::pair<Scheme, Formula>> scheme_instances(System sys, const SearchBounds& b, std::size_t depth,
                                                         std::size_t max_size) {
  const auto ws = search_workspace(b);
  const auto agents = ws.agents();
  const auto metas = enumerate_formulas(ws.all_vars(), agents, depth, max_size, sys == System::EDL);
  std::vector<std::pair<Scheme, Formula>> out;
  for (auto s : admitted_schemes(sys)) {
    for (auto a : agents) {
      Substitution sub;
      sub.agent = a;
      if (s == Scheme::Loc) {
        for (auto p : ws.vars_of(a)) {
          sub.p = p;
          out.emplace_back(s, instantiate(s, sub));
        }
        continue;
      }
      const bool binary = s == Scheme::K_B || s == Scheme::K_K;
      for (const auto& phi : metas) {
        sub.phi = phi;
        if (!binary) {
          out.emplace_back(s, instantiate(s, sub));
          continue;
        }
        for (const auto& psi : metas) {
          sub.psi = psi;
          out.emplace_back(s, instantiate(s, sub));
        }
      }
    }
  }
  return out;
}

SoundnessReport soundness_suite(System sys, ModelClass cls, const SearchBounds& b, std::size_t instantiation_depth,
                                std::size_t max_size, std::size_t workers) {
  const auto start = std::chrono::steady_clock::now();
  if (cls != intended_class(sys)) {
    throw Error(ErrorKind::precondition, std::string(to_string(sys)) + " is checked over " +
                                             std::string(to_string(intended_class(sys))) + ", not " +
                                             std::string(to_string(cls)));
  }
  workers = std::max<std::size_t>(workers, 1);
  const auto instances = scheme_instances(sys, b, instantiation_depth, max_size);

  SoundnessReport report;
  report.system = sys;
  report.model_class = cls;
  report.instances = instances.size();

  std::vector<HypergraphModel> models;
  for_each_model(cls, b, [&](const HypergraphModel& m) {
    models.push_back(m);
    return true;
  });
  report.models_visited = models.size();
  std::vector<HypergraphEvaluator> evaluators;
  evaluators.reserve(models.size());
  for (const auto& m : models) evaluators.emplace_back(m);

  // first[i]: (model index, edge) of the first failure of instance i.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> first(instances.size());
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < instances.size(); i += workers) {
      for (std::size_t k = 0; k < models.size() && !first[i]; ++k) {
        auto t = evaluators[k].truth_set(instances[i].second);
        auto it = std::find(t.begin(), t.end(), 0);
        if (it != t.end()) first[i] = std::make_pair(k, static_cast<std::size_t>(it - t.begin()));
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (first[i]) report.violations.push_back({instances[i].first, instances[i].second, first[i]->first, first[i]->second});
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace hyperdox
