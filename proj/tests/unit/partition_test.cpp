#include <gtest/gtest.h>

#include "corpus.hpp"
#include "orbitscope/errors.hpp"
#include "orbitscope/oracle.hpp"
#include "orbitscope/partition.hpp"
#include "orbitscope/refinement.hpp"

namespace orbitscope {
namespace {

using Classes = std::vector<std::vector<VertexId>>;

// Every set partition of [0, n), via restricted growth strings.
void extend(std::vector<std::int64_t>& rgs, std::size_t n, std::int64_t top,
            std::vector<OrderedPartition>& out) {
  if (rgs.size() == n) {
    out.push_back(OrderedPartition::from_labels(rgs));
    return;
  }
  for (std::int64_t c = 0; c <= top + 1; ++c) {
    rgs.push_back(c);
    extend(rgs, n, std::max(top, c), out);
    rgs.pop_back();
  }
}

std::vector<OrderedPartition> all_partitions(std::size_t n) {
  std::vector<OrderedPartition> out;
  std::vector<std::int64_t> rgs;
  extend(rgs, n, -1, out);
  return out;
}

TEST(OrderedPartition, FromLabelsOrdersByLabel) {
  const std::vector<std::int64_t> labels{5, 2, 5, 9};
  const auto p = OrderedPartition::from_labels(labels);
  EXPECT_EQ(p.classes(), (Classes{{1}, {0, 2}, {3}}));
  EXPECT_EQ(p.class_of(2), 1);
}

TEST(OrderedPartition, FromClassesValidates) {
  EXPECT_THROW(OrderedPartition::from_classes(3, {{0, 1}}), InvariantViolation);
  EXPECT_THROW(OrderedPartition::from_classes(3, {{0, 1}, {1, 2}}), InvariantViolation);
  EXPECT_THROW(OrderedPartition::from_classes(2, {{0, 1}, {}}), InvariantViolation);
  EXPECT_THROW(OrderedPartition::from_classes(2, {{0, 2}}), InvariantViolation);
  EXPECT_NO_THROW(OrderedPartition::from_classes(3, {{2}, {1, 0}}));
}

TEST(OrderedPartition, UnitAndDiscrete) {
  EXPECT_EQ(OrderedPartition::unit(4).class_count(), 1u);
  EXPECT_TRUE(is_discrete(OrderedPartition::discrete(4)));
  EXPECT_TRUE(is_discrete(OrderedPartition::unit(1)));
  EXPECT_TRUE(is_discrete(OrderedPartition::unit(0)));
  EXPECT_FALSE(is_discrete(OrderedPartition::unit(2)));
}

TEST(OrderedPartition, Refinement) {
  const auto fine = OrderedPartition::from_classes(4, {{0}, {1}, {2, 3}});
  const auto coarse = OrderedPartition::from_classes(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(is_finer_or_equal(fine, coarse));
  EXPECT_FALSE(is_finer_or_equal(coarse, fine));
  EXPECT_TRUE(is_finer_or_equal(coarse, coarse));
  EXPECT_THROW(is_finer_or_equal(fine, OrderedPartition::unit(3)), SizeMismatch);
}

TEST(OrderedPartition, SameBlocksIgnoresOrder) {
  const auto a = OrderedPartition::from_classes(3, {{0, 2}, {1}});
  const auto b = OrderedPartition::from_classes(3, {{1}, {2, 0}});
  EXPECT_TRUE(same_blocks(a, b));
  EXPECT_NE(a, b);
}

TEST(PartitionJoin, Examples) {
  const auto p = OrderedPartition::from_classes(5, {{0, 1}, {2}, {3}, {4}});
  const auto q = OrderedPartition::from_classes(5, {{0}, {1, 2}, {3}, {4}});
  EXPECT_EQ(partition_join(p, q).classes(), (Classes{{0, 1, 2}, {3}, {4}}));
  const auto d = OrderedPartition::discrete(5);
  EXPECT_TRUE(same_blocks(partition_join(p, d), p));
  EXPECT_THROW(partition_join(p, OrderedPartition::discrete(4)), SizeMismatch);
}

TEST(PartitionJoin, LatticeLawsExhaustiveUpToFive) {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto all = all_partitions(n);
    for (const auto& p : all) {
      EXPECT_TRUE(same_blocks(partition_join(p, p), p));
      EXPECT_TRUE(same_blocks(partition_join(p, OrderedPartition::discrete(n)), p));
      for (const auto& q : all) {
        const auto j = partition_join(p, q);
        EXPECT_TRUE(same_blocks(j, partition_join(q, p)));
        EXPECT_TRUE(is_finer_or_equal(p, j));
        EXPECT_TRUE(is_finer_or_equal(q, j));
        // Least upper bound: any common coarsening also coarsens the join.
        for (const auto& r : all) {
          if (is_finer_or_equal(p, r) && is_finer_or_equal(q, r)) {
            EXPECT_TRUE(is_finer_or_equal(j, r));
          }
        }
      }
    }
  }
}

TEST(PartitionJoin, PartitionCounts) {
  // Bell numbers.
  EXPECT_EQ(all_partitions(0).size(), 1u);
  EXPECT_EQ(all_partitions(1).size(), 1u);
  EXPECT_EQ(all_partitions(3).size(), 5u);
  EXPECT_EQ(all_partitions(5).size(), 52u);
}

TEST(PartitionJoin, JoinOfOrbitPartitionsMatchesCombinedClosure) {
  testing::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 5 + static_cast<std::size_t>(i % 4);
    std::vector<Permutation> a, b;
    for (int j = 0, m = 1 + i % 3; j < m; ++j) a.push_back(testing::random_permutation(n, rng));
    for (int j = 0, m = 1 + (i / 3) % 3; j < m; ++j) b.push_back(testing::random_permutation(n, rng));
    std::vector<Permutation> both(a);
    both.insert(both.end(), b.begin(), b.end());
    EXPECT_TRUE(same_blocks(partition_join(oracle::closure_orbits(n, a), oracle::closure_orbits(n, b)),
                            oracle::closure_orbits(n, both)));
  }
}

TEST(CyclePartition, Cycles) {
  EXPECT_EQ(cycle_partition(Permutation({1, 0, 3, 4, 2})).classes(), (Classes{{0, 1}, {2, 3, 4}}));
  EXPECT_TRUE(is_discrete(cycle_partition(Permutation::identity(3))));
}

TEST(NormalizeColors, OrdersByMemberColors) {
  // Vertex colors: 0 -> label 1, 1 -> label 0, 2 -> label 0.
  const std::vector<std::uint64_t> labels{1, 5, 5, 5, 0, 5, 5, 5, 0};
  const Graph g = Graph::from_labels(3, labels);
  const auto p = OrderedPartition::from_classes(3, {{0}, {1, 2}});
  EXPECT_EQ(normalize_colors(g, p).classes(), (Classes{{1, 2}, {0}}));
  EXPECT_THROW(normalize_colors(g, OrderedPartition::unit(2)), InvariantViolation);
}

TEST(NormalizeColors, IdempotentAndNoOpOnRefineOutput) {
  for (const Graph& g : testing::small_corpus()) {
    const auto p = refine(g, {}).vertex_partition;
    EXPECT_EQ(normalize_colors(g, p), p);
    const auto once = normalize_colors(g, OrderedPartition::discrete(g.order()));
    EXPECT_EQ(normalize_colors(g, once), once);
  }
}

TEST(NormalizeColors, Equivariant) {
  testing::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(i % 6);
    const Graph g = testing::random_digraph(n, 3, rng);
    const Permutation perm = testing::random_permutation(n, rng);
    const auto p = refine(g, {.k = 1}).vertex_partition;
    const auto a = normalize_colors(g, p);
    auto move = [&](const OrderedPartition& q) {
      std::vector<std::vector<VertexId>> moved;
      for (const auto& members : q.classes()) {
        std::vector<VertexId> m;
        for (VertexId v : members) m.push_back(perm(v));
        std::sort(m.begin(), m.end());
        moved.push_back(m);
      }
      return OrderedPartition::from_classes(n, moved);
    };
    EXPECT_EQ(normalize_colors(apply_permutation(g, perm), move(p)), move(a));
  }
}

}  // namespace
}  // namespace orbitscope
