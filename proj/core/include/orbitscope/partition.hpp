#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orbitscope/graph.hpp"
#include "orbitscope/permutation.hpp"

namespace orbitscope {

using ClassId = std::int32_t;

// A partition of [0, n) into nonempty classes with a fixed class order.
// Members of each class are kept sorted ascending.
class OrderedPartition {
 public:
  OrderedPartition() = default;

  // Classes ordered by ascending label value; labels need not be compact.
  static OrderedPartition from_labels(std::span<const std::int64_t> labels);
  // Classes in the given order. Throws InvariantViolation unless the
  // classes are nonempty, disjoint and cover [0, n).
  static OrderedPartition from_classes(std::size_t n,
                                       std::vector<std::vector<VertexId>> classes);
  static OrderedPartition unit(std::size_t n);
  static OrderedPartition discrete(std::size_t n);

  std::size_t size() const { return class_of_.size(); }
  std::size_t class_count() const { return classes_.size(); }
  ClassId class_of(VertexId v) const { return class_of_[static_cast<std::size_t>(v)]; }
  std::span<const VertexId> members(ClassId c) const {
    return classes_[static_cast<std::size_t>(c)];
  }
  const std::vector<std::vector<VertexId>>& classes() const { return classes_; }

  // Same classes, reordered by minimum element.
  OrderedPartition sorted_by_min() const;

  // Ordered equality: identical classes in identical order.
  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  std::vector<ClassId> class_of_;
  std::vector<std::vector<VertexId>> classes_;
};

bool is_discrete(const OrderedPartition& p);

// Every class of p lies inside a class of q. Throws SizeMismatch.
bool is_finer_or_equal(const OrderedPartition& p, const OrderedPartition& q);

// Unordered equality of the underlying set partitions.
bool same_blocks(const OrderedPartition& p, const OrderedPartition& q);

// Lattice join: the finest partition coarser than both. Classes of the
// result are ordered by minimum element. Throws SizeMismatch.
OrderedPartition partition_join(const OrderedPartition& p, const OrderedPartition& q);

// Cycle partition of a single permutation, ordered by minimum element.
OrderedPartition cycle_partition(const Permutation& perm);

// Canonical class order for p on g: classes sorted by the set of vertex
// colors of their members, ties kept in p's current order. The
// key only depends on data that moves with a vertex relabeling, so the
// result is relabeling-equivariant, and it is idempotent. Partitions built
// by refine() are already in this order.
// Throws InvariantViolation if p does not partition the vertices of g.
OrderedPartition normalize_colors(const Graph& g, const OrderedPartition& p);

}  // namespace orbitscope
