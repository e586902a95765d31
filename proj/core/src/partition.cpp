#include "orbitscope/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "disjoint_sets.hpp"
#include "orbitscope/errors.hpp"

namespace orbitscope {

OrderedPartition OrderedPartition::from_labels(std::span<const std::int64_t> labels) {
  std::vector<std::int64_t> distinct(labels.begin(), labels.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  OrderedPartition p;
  p.class_of_.resize(labels.size());
  p.classes_.resize(distinct.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const auto c = static_cast<ClassId>(
        std::lower_bound(distinct.begin(), distinct.end(), labels[v]) - distinct.begin());
    p.class_of_[v] = c;
    p.classes_[static_cast<std::size_t>(c)].push_back(static_cast<VertexId>(v));
  }
  return p;
}

OrderedPartition OrderedPartition::from_classes(std::size_t n,
                                                std::vector<std::vector<VertexId>> classes) {
  OrderedPartition p;
  p.class_of_.assign(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto& members = classes[c];
    if (members.empty()) throw InvariantViolation("empty partition class");
    std::sort(members.begin(), members.end());
    for (VertexId v : members) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw InvariantViolation("partition member out of range");
      }
      if (p.class_of_[static_cast<std::size_t>(v)] != -1) {
        throw InvariantViolation("partition classes overlap");
      }
      p.class_of_[static_cast<std::size_t>(v)] = static_cast<ClassId>(c);
    }
  }
  if (std::ranges::find(p.class_of_, -1) != p.class_of_.end()) {
    throw InvariantViolation("partition classes do not cover all vertices");
  }
  p.classes_ = std::move(classes);
  return p;
}

OrderedPartition OrderedPartition::unit(std::size_t n) {
  std::vector<std::int64_t> labels(n, 0);
  return from_labels(labels);
}

OrderedPartition OrderedPartition::discrete(std::size_t n) {
  std::vector<std::int64_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

OrderedPartition OrderedPartition::sorted_by_min() const {
  std::vector<std::int64_t> labels(class_of_.size());
  for (std::size_t v = 0; v < class_of_.size(); ++v) {
    labels[v] = classes_[static_cast<std::size_t>(class_of_[v])].front();
  }
  return from_labels(labels);
}

bool is_discrete(const OrderedPartition& p) { return p.class_count() == p.size(); }

bool is_finer_or_equal(const OrderedPartition& p, const OrderedPartition& q) {
  if (p.size() != q.size()) throw SizeMismatch("partitions of different ground sets");
  for (const auto& members : p.classes()) {
    const ClassId target = q.class_of(members.front());
    for (VertexId v : members) {
      if (q.class_of(v) != target) return false;
    }
  }
  return true;
}

bool same_blocks(const OrderedPartition& p, const OrderedPartition& q) {
  return p.class_count() == q.class_count() && is_finer_or_equal(p, q);
}

OrderedPartition partition_join(const OrderedPartition& p, const OrderedPartition& q) {
  if (p.size() != q.size()) throw SizeMismatch("partitions of different ground sets");
  detail::DisjointSets sets(p.size());
  for (const auto* part : {&p, &q}) {
    for (const auto& members : part->classes()) {
      for (VertexId v : members) sets.unite(members.front(), v);
    }
  }
  return sets.to_partition();
}

OrderedPartition cycle_partition(const Permutation& perm) {
  detail::DisjointSets sets(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) {
    sets.unite(static_cast<VertexId>(v), perm(static_cast<VertexId>(v)));
  }
  return sets.to_partition();
}

OrderedPartition normalize_colors(const Graph& g, const OrderedPartition& p) {
  if (p.size() != g.order()) {
    throw InvariantViolation("partition does not cover the graph's vertex set");
  }
  // Key: (distinct vertex colors of the class, current position). Sizes are
  // left out so that refine() output, whose classes are vertex-color
  // uniform and grouped by color, is a fixed point.
  std::vector<std::pair<std::vector<ColorId>, ClassId>> keys;
  keys.reserve(p.class_count());
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    std::vector<ColorId> colors;
    for (VertexId v : p.members(static_cast<ClassId>(c))) colors.push_back(g.vertex_color(v));
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    keys.emplace_back(std::move(colors), static_cast<ClassId>(c));
  }
  std::sort(keys.begin(), keys.end());
  std::vector<std::vector<VertexId>> classes;
  classes.reserve(keys.size());
  for (const auto& [colors, c] : keys) {
    const auto m = p.members(c);
    classes.emplace_back(m.begin(), m.end());
  }
  return OrderedPartition::from_classes(p.size(), std::move(classes));
}

}  // namespace orbitscope
