#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace hyperdox {

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

  /// Dense class labels 0..k-1, numbered by first occurrence.
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> label(parent_.size());
    std::vector<std::size_t> by_root(parent_.size(), npos);
    std::size_t next = 0;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      auto r = find(x);
      if (by_root[r] == npos) by_root[r] = next++;
      label[x] = by_root[r];
    }
    return label;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace hyperdox
