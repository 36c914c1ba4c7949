#include "hyperdox/convert/equivalence.hpp"

#include "hyperdox/error.hpp"
#include "hyperdox/hypergraph/metrics.hpp"
#include "hyperdox/hypergraph/satisfaction.hpp"
#include "hyperdox/kripke/satisfaction.hpp"
#include "hyperdox/logic/analysis.hpp"

namespace hyperdox {

EquivalenceReport check_modal_equivalence(const KripkeModel& mk, const HypergraphModel& mh,
                                          const std::vector<std::size_t>& edge_of_world,
                                          const std::vector<Formula>& formulas) {
  if (edge_of_world.size() != mk.world_count()) {
    throw Error(ErrorKind::input, "world-to-edge map must cover every world");
  }
  for (auto e : edge_of_world) {
    if (e >= mh.edge_count()) throw Error(ErrorKind::input, "world-to-edge map points outside the hypergraph");
  }
  bool doxastic_only = true;
  for (const auto& f : formulas) doxastic_only = doxastic_only && in_doxastic_fragment(f);
  if (!doxastic_only) {
    bool serial = model_properties(mk).kripke->in_k_ste && graph_metrics(mh).hypergraph->in_h_sut;
    if (!serial) {
      throw Error(ErrorKind::fragment,
                  "knowledge formulas are only compared on models in K^ste and H^sut");
    }
  }

  KripkeEvaluator ke(mk);
  HypergraphEvaluator he(mh);
  EquivalenceReport report;
  std::vector<std::vector<char>> kt, ht;
  for (const auto& f : formulas) {
    kt.push_back(ke.truth_set(f));
    ht.push_back(he.truth_set(f));
  }
  for (std::size_t w = 0; w < mk.world_count(); ++w) {
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      EquivalenceRow row{w, edge_of_world[w], i, kt[i][w] != 0, ht[i][edge_of_world[w]] != 0};
      if (!row.agree()) ++report.disagreements;
      report.rows.push_back(row);
    }
  }
  report.all_agree = report.disagreements == 0;
  return report;
}

}  // namespace hyperdox
