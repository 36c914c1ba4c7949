#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace hyperdox {

/// A binary relation over the states {0, ..., n-1}, kept as a sorted pair set
/// with a successor index.
class Relation {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  explicit Relation(std::size_t n = 0);
  /// Throws Error(input) if a pair is out of bounds. Duplicates are merged.
  Relation(std::size_t n, std::vector<Pair> pairs);

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);

  std::size_t domain_size() const { return n_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::span<const std::size_t> successors(std::size_t u) const { return succ_.at(u); }
  bool contains(std::size_t u, std::size_t v) const;
  bool empty() const { return pairs_.empty(); }

  Relation inverse() const;
  Relation symmetric_closure() const;
  /// `then ∘ this`: pairs (u, w) with u this v and v then w.
  Relation compose(const Relation& then) const;
  /// R^m, with R^0 the identity.
  Relation power(std::size_t m) const;
  Relation reflexive_transitive_closure() const;
  bool is_subset_of(const Relation& other) const;

  friend bool operator==(const Relation& x, const Relation& y) {
    return x.n_ == y.n_ && x.pairs_ == y.pairs_;
  }

 private:
  std::size_t n_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<std::size_t>> succ_;
};

/// The smallest equivalence relation containing `r`, i.e. (r ∪ r⁻¹)*,
/// computed by union-find.
Relation generated_equivalence(const Relation& r);

/// Class label of each state under the generated equivalence of `r`.
std::vector<std::size_t> equivalence_classes(const Relation& r);

struct RelationProperties {
  bool serial = false;
  bool transitive = false;
  bool euclidean = false;
  bool reflexive = false;
  bool symmetric = false;
};

RelationProperties relation_properties(const Relation& r);

}  // namespace hyperdox
