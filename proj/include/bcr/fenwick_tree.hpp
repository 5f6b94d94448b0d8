#pragma once

#include <cstddef>
#include <vector>

namespace bcr {

// Prefix sums over 0..n-1 with point updates, both O(log n).
template <typename T>
class FenwickTree {
 public:
  explicit FenwickTree(std::size_t n) : tree_(n + 1, T{}) {}

  std::size_t size() const noexcept { return tree_.size() - 1; }

  void add(std::size_t i, T delta) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }

  // sum of a[0..i] inclusive
  T prefix(std::size_t i) const {
    T s{};
    for (++i; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<T> tree_;  // 1-based
};

}  // namespace bcr
