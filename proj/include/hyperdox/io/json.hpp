#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hyperdox/convert/conversion.hpp"
#include "hyperdox/convert/equivalence.hpp"
#include "hyperdox/hypergraph/complex.hpp"
#include "hyperdox/hypergraph/model.hpp"
#include "hyperdox/kripke/model.hpp"
#include "hyperdox/logic/formula.hpp"
#include "hyperdox/proofcheck/checker.hpp"
#include "hyperdox/report.hpp"
#include "hyperdox/search/countermodel.hpp"
#include "hyperdox/search/soundness.hpp"

namespace hyperdox {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws Error(input) when the file is missing
/// or malformed.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

/// The "agents"/"vars" block. Model and proof files must declare at least one
/// variable for the first agent, which is the designated atom.
Workspace workspace_from_json(const Json& j);
void write_workspace(Json& j, const Workspace& ws);

KripkeModel kripke_from_json(const Json& j);
Json to_json(const KripkeModel& m);

RawHypergraph raw_hypergraph_from_json(const Json& j);
HypergraphModel hypergraph_from_json(const Json& j);
Json to_json(const HypergraphModel& m);

using LoadedModel = std::variant<KripkeModel, HypergraphModel>;

/// Dispatches on "kind": "kripke" or "hypergraph".
LoadedModel model_from_json(const Json& j);
LoadedModel load_model(const std::filesystem::path& path);
const Workspace& workspace_of(const LoadedModel& m);

Json to_json(const ClassReport& r, const Workspace& ws);

Json to_json(const ConversionCertificate& c, const Workspace& ws);
/// Reads "direction" and "map"; the class reports are not read back.
ConversionCertificate certificate_from_json(const Json& j);

struct ProofDocument {
  Workspace workspace;
  System system;
  std::vector<ProofStep> steps;
};

ProofDocument proof_from_json(const Json& j);
Json to_json(const ProofResult& r, std::size_t steps);

Json to_json(const SearchResult& r, ModelClass cls, const Formula& f);
Json to_json(const SoundnessReport& r, const Workspace& ws);
Json to_json(const EquivalenceReport& r, const KripkeModel& mk, const HypergraphModel& mh,
             const std::vector<Formula>& formulas);
Json to_json(const std::vector<Facet>& facets, const HypergraphModel& m);

Json error_json(ErrorKind kind, const std::string& message);

}  // namespace hyperdox
