#include "hyperdox/kripke/relation.hpp"

#include <algorithm>
#include <string>

#include "hyperdox/error.hpp"
#include "hyperdox/kripke/disjoint_sets.hpp"

namespace hyperdox {

Relation::Relation(std::size_t n) : n_(n), succ_(n) {}

Relation::Relation(std::size_t n, std::vector<Pair> pairs) : n_(n), pairs_(std::move(pairs)), succ_(n) {
  for (const auto& [u, v] : pairs_) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::input, "relation pair (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") outside a domain of size " + std::to_string(n));
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  for (const auto& [u, v] : pairs_) succ_[u].push_back(v);
}

Relation Relation::identity(std::size_t n) {
  std::vector<Pair> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(i, i);
  return Relation(n, std::move(p));
}

Relation Relation::full(std::size_t n) {
  std::vector<Pair> p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.emplace_back(i, j);
  return Relation(n, std::move(p));
}

bool Relation::contains(std::size_t u, std::size_t v) const {
  if (u >= n_) return false;
  const auto& s = succ_[u];
  return std::binary_search(s.begin(), s.end(), v);
}

Relation Relation::inverse() const {
  std::vector<Pair> p;
  p.reserve(pairs_.size());
  for (const auto& [u, v] : pairs_) p.emplace_back(v, u);
  return Relation(n_, std::move(p));
}

Relation Relation::symmetric_closure() const {
  auto p = pairs_;
  for (const auto& [u, v] : pairs_) p.emplace_back(v, u);
  return Relation(n_, std::move(p));
}

Relation Relation::compose(const Relation& then) const {
  if (then.n_ != n_) throw Error(ErrorKind::input, "composing relations over different domains");
  std::vector<Pair> p;
  for (const auto& [u, v] : pairs_)
    for (auto w : then.succ_[v]) p.emplace_back(u, w);
  return Relation(n_, std::move(p));
}

Relation Relation::power(std::size_t m) const {
  auto out = identity(n_);
  for (std::size_t i = 0; i < m; ++i) out = compose(out);
  return out;
}

Relation Relation::reflexive_transitive_closure() const {
  std::vector<Pair> p;
  std::vector<char> seen(n_);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n_; ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      p.emplace_back(s, u);
      for (auto v : succ_[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return Relation(n_, std::move(p));
}

bool Relation::is_subset_of(const Relation& other) const {
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [&](const Pair& q) { return other.contains(q.first, q.second); });
}

std::vector<std::size_t> equivalence_classes(const Relation& r) {
  DisjointSets sets(r.domain_size());
  for (const auto& [u, v] : r.pairs()) sets.unite(u, v);
  return sets.labels();
}

Relation generated_equivalence(const Relation& r) {
  auto label = equivalence_classes(r);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t u = 0; u < label.size(); ++u) {
    if (label[u] >= members.size()) members.resize(label[u] + 1);
    members[label[u]].push_back(u);
  }
  std::vector<Relation::Pair> p;
  for (const auto& cls : members)
    for (auto u : cls)
      for (auto v : cls) p.emplace_back(u, v);
  return Relation(r.domain_size(), std::move(p));
}

RelationProperties relation_properties(const Relation& r) {
  const auto n = r.domain_size();
  RelationProperties out{true, true, true, true, true};
  for (std::size_t u = 0; u < n; ++u) {
    auto s = r.successors(u);
    if (s.empty()) out.serial = false;
    if (!r.contains(u, u)) out.reflexive = false;
    for (auto v : s) {
      if (!r.contains(v, u)) out.symmetric = false;
      for (auto w : r.successors(v))
        if (!r.contains(u, w)) out.transitive = false;
      for (auto w : s)
        if (!r.contains(v, w)) out.euclidean = false;
    }
  }
  return out;
}

}  // namespace hyperdox
