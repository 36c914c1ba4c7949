#include "hyperdox/proofcheck/tautology.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hyperdox/error.hpp"

namespace hyperdox {

namespace {

// Flattened propositional skeleton evaluated bottom-up per assignment.
struct Op {
  enum class Kind { letter, neg, conj } kind;
  std::size_t a = 0;
  std::size_t b = 0;
};

std::size_t compile(const Formula& f, std::unordered_map<Formula, std::size_t>& letters, std::vector<Op>& ops) {
  switch (f.kind()) {
    case Connective::negation: {
      auto x = compile(f.operand(), letters, ops);
      ops.push_back({Op::Kind::neg, x, 0});
      break;
    }
    case Connective::conjunction: {
      auto x = compile(f.left(), letters, ops);
      auto y = compile(f.right(), letters, ops);
      ops.push_back({Op::Kind::conj, x, y});
      break;
    }
    default: {
      auto [it, fresh] = letters.emplace(f, letters.size());
      if (fresh && letters.size() > max_tautology_letters) {
        throw Error(ErrorKind::limit, "formula too large for the tautology check: more than " +
                                          std::to_string(max_tautology_letters) + " letters");
      }
      ops.push_back({Op::Kind::letter, it->second, 0});
      break;
    }
  }
  return ops.size() - 1;
}

}  // namespace

bool is_tautology_instance(const Formula& f) {
  std::unordered_map<Formula, std::size_t> letters;
  std::vector<Op> ops;
  compile(f, letters, ops);
  std::vector<char> value(ops.size());
  const std::uint64_t rows = std::uint64_t{1} << letters.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const auto& op = ops[i];
      switch (op.kind) {
        case Op::Kind::letter: value[i] = (row >> op.a) & 1; break;
        case Op::Kind::neg: value[i] = !value[op.a]; break;
        case Op::Kind::conj: value[i] = value[op.a] && value[op.b]; break;
      }
    }
    if (!value.back()) return false;
  }
  return true;
}

}  // namespace hyperdox
