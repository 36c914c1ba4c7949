#include "hyperdox/search/countermodel.hpp"

#include <algorithm>
#include <thread>

#include "hyperdox/error.hpp"
#include "hyperdox/hypergraph/satisfaction.hpp"
#include "hyperdox/logic/analysis.hpp"

namespace hyperdox {

void require_declared(const Formula& f, const Workspace& ws) {
  switch (f.kind()) {
    case Connective::atom:
      if (!ws.declares(f.var())) throw Error(ErrorKind::undeclared_atom, "atom outside the search workspace");
      return;
    case Connective::negation: require_declared(f.operand(), ws); return;
    case Connective::conjunction:
      require_declared(f.left(), ws);
      require_declared(f.right(), ws);
      return;
    case Connective::belief:
    case Connective::knowledge:
      if (f.agent().index >= ws.agent_count()) {
        throw Error(ErrorKind::undeclared_agent, "agent outside the search workspace");
      }
      require_declared(f.operand(), ws);
      return;
  }
}

namespace {

constexpr std::size_t batch_size = 2048;

std::optional<std::size_t> falsified_at(const HypergraphModel& m, const Formula& f) {
  auto t = HypergraphEvaluator(m).truth_set(f);
  auto it = std::find(t.begin(), t.end(), 0);
  if (it == t.end()) return std::nullopt;
  return static_cast<std::size_t>(it - t.begin());
}

}  // namespace

SearchResult countermodel(ModelClass cls, const Formula& f, const SearchBounds& b, std::size_t workers) {
  const auto start = std::chrono::steady_clock::now();
  const auto ws = search_workspace(b);
  require_declared(f, ws);
  if (cls == ModelClass::h_su && !in_doxastic_fragment(f)) {
    throw Error(ErrorKind::fragment, "knowledge operators are not evaluated over H_su");
  }
  workers = std::max<std::size_t>(workers, 1);

  SearchResult result;
  std::vector<ModelSpec> batch;
  std::size_t seen = 0;

  // Checks the batch; on a witness, records it and the count up to it.
  auto flush = [&]() -> bool {
    std::vector<std::optional<std::size_t>> hit(batch.size());
    auto work = [&](std::size_t w) {
      for (std::size_t i = w; i < batch.size(); i += workers) hit[i] = falsified_at(build_model(ws, batch[i]), f);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (hit[i]) {
        result.witness = Countermodel{build_model(ws, batch[i]), *hit[i]};
        result.models_visited = seen + i + 1;
        return false;
      }
    }
    seen += batch.size();
    batch.clear();
    return true;
  };

  bool open = true;
  for_each_model_spec(cls, b, [&](const ModelSpec& spec) {
    batch.push_back(spec);
    if (batch.size() == batch_size) open = flush();
    return open;
  });
  if (open) flush();
  if (!result.witness) result.models_visited = seen;
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace hyperdox
