#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "hyperdox/logic/formula.hpp"
#include "hyperdox/proofcheck/schemes.hpp"
#include "hyperdox/search/enumerate.hpp"

namespace hyperdox {

struct SoundnessViolation {
  Scheme scheme;
  Formula instance;
  /// Position of the model in enumeration order and the failing edge.
  std::size_t model_index = 0;
  std::size_t edge = 0;
};

struct SoundnessReport {
  System system = System::EDL;
  ModelClass model_class = ModelClass::h_sut;
  std::size_t instances = 0;
  std::size_t models_visited = 0;
  /// At most one entry per instance: its first failure.
  std::vector<SoundnessViolation> violations;
  std::chrono::milliseconds elapsed{0};
};

/// The class each system is checked against: H_su for LocK45, H_sut for the
/// other two.
ModelClass intended_class(System sys);

/// All instances of the admitted schemes of `sys` with metaformulas drawn from
/// enumerate_formulas(depth, max_size) over the search workspace; knowledge
/// operators only for EDL.
std::vector<std::pair<Scheme, Formula>> scheme_instances(System sys, const SearchBounds& b, std::size_t depth,
                                                         std::size_t max_size);

/// Evaluates every instance at every edge of every enumerated model.
/// Throws Error(precondition) unless `cls` is intended_class(sys).
SoundnessReport soundness_suite(System sys, ModelClass cls, const SearchBounds& b, std::size_t instantiation_depth,
                                std::size_t max_size = 3, std::size_t workers = 1);

}  // namespace hyperdox
