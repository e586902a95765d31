#pragma once

#include <numeric>
#include <vector>

#include "orbitscope/partition.hpp"

namespace orbitscope::detail {

// Union-find with path halving; roots are the smallest member so class
// minima are available without a second pass.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  VertexId find(VertexId v) {
    auto i = static_cast<std::size_t>(v);
    while (parent_[i] != static_cast<VertexId>(i)) {
      parent_[i] = parent_[static_cast<std::size_t>(parent_[i])];
      i = static_cast<std::size_t>(parent_[i]);
    }
    return static_cast<VertexId>(i);
  }

  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

  // Classes ordered by minimum element.
  OrderedPartition to_partition() {
    std::vector<std::int64_t> labels(parent_.size());
    for (std::size_t v = 0; v < parent_.size(); ++v) labels[v] = find(static_cast<VertexId>(v));
    return OrderedPartition::from_labels(labels);
  }

 private:
  std::vector<VertexId> parent_;
};

}  // namespace orbitscope::detail
