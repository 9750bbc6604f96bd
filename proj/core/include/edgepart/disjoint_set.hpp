#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace edgepart {

// Union-find over 0-based elements with union by size and path halving.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true iff x and y were in different sets.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    --sets_;
    return true;
  }

  bool connected(std::size_t x, std::size_t y) { return find(x) == find(y); }
  std::size_t set_size(std::size_t x) { return size_[find(x)]; }
  std::size_t set_count() const noexcept { return sets_; }
  std::size_t element_count() const noexcept { return parent_.size(); }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    std::fill(size_.begin(), size_.end(), std::size_t{1});
    sets_ = parent_.size();
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

}  // namespace edgepart
