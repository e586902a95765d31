#include <gtest/gtest.h>

#include "corpus.hpp"
#include "orbitscope/errors.hpp"
#include "orbitscope/graph.hpp"

namespace orbitscope {
namespace {

TEST(Graph, LabelsAreCompactedInOrder) {
  const std::vector<std::uint64_t> labels{7, 3, 3, 7};
  const Graph g = Graph::from_labels(2, labels);
  EXPECT_EQ(g.color_count(), 2u);
  EXPECT_EQ(g.at(0, 0), 1u);
  EXPECT_EQ(g.at(0, 1), 0u);
  ASSERT_EQ(g.palette().size(), 2u);
  EXPECT_EQ(g.palette()[0], 3u);
  EXPECT_EQ(g.palette()[1], 7u);
}

TEST(Graph, RejectsWrongMatrixSize) {
  const std::vector<std::uint64_t> labels{0, 1, 1};
  EXPECT_THROW(Graph::from_labels(2, labels), SizeMismatch);
}

TEST(Graph, EmptyGraph) {
  const Graph g = Graph::from_labels(0, {});
  EXPECT_EQ(g.order(), 0u);
  EXPECT_EQ(g.color_count(), 0u);
  EXPECT_TRUE(is_automorphism(g, Permutation::identity(0)));
}

TEST(Graph, SimpleEncodingUsesThreeLabels) {
  const Graph p3 = path_graph(3);
  EXPECT_EQ(p3.color_count(), 3u);
  EXPECT_EQ(p3.at(0, 0), 0u);
  EXPECT_EQ(p3.at(0, 1), 1u);
  EXPECT_EQ(p3.at(1, 0), 1u);
  EXPECT_EQ(p3.at(0, 2), 2u);
  // K_n has no non-edge, yet keeps its labels apart from the empty graph.
  EXPECT_NE(complete_graph(3), testing::graph_from_mask(3, 0));
}

TEST(Graph, FromEdgesRejectsLoopsAndRange) {
  const std::vector<std::pair<VertexId, VertexId>> loop{{1, 1}};
  EXPECT_THROW(from_edges(3, loop), InvariantViolation);
  const std::vector<std::pair<VertexId, VertexId>> far{{0, 3}};
  EXPECT_THROW(from_edges(3, far), RangeError);
}

TEST(Graph, ApplyPermutationMovesEntries) {
  testing::Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const Graph g = testing::random_digraph(6, 3, rng);
    const Permutation p = testing::random_permutation(6, rng);
    const Graph h = apply_permutation(g, p);
    for (VertexId u = 0; u < 6; ++u) {
      for (VertexId v = 0; v < 6; ++v) EXPECT_EQ(h.at(p(u), p(v)), g.at(u, v));
    }
    EXPECT_TRUE(is_isomorphism(g, h, p));
    EXPECT_EQ(apply_permutation(h, p.inverse()), g);
  }
}

TEST(Graph, AutomorphismChecks) {
  const Graph c = testing::c5();
  EXPECT_TRUE(is_automorphism(c, Permutation({1, 2, 3, 4, 0})));
  EXPECT_TRUE(is_automorphism(c, Permutation({0, 4, 3, 2, 1})));
  EXPECT_FALSE(is_automorphism(c, Permutation({1, 0, 2, 3, 4})));
  EXPECT_THROW(is_automorphism(c, Permutation::identity(4)), SizeMismatch);
}

TEST(Graph, IsomorphismNeedsEqualPalettes) {
  // Same compact matrix, different source labels.
  const std::vector<std::uint64_t> a{0, 1, 1, 0};
  const std::vector<std::uint64_t> b{0, 2, 2, 0};
  EXPECT_FALSE(is_isomorphism(Graph::from_labels(2, a), Graph::from_labels(2, b),
                              Permutation::identity(2)));
}

TEST(Graph, DisjointUnion) {
  const Graph u = disjoint_union(cycle_graph(3), path_graph(2));
  EXPECT_EQ(u.order(), 5u);
  EXPECT_EQ(u.at(0, 1), 1u);
  EXPECT_EQ(u.at(3, 4), 1u);
  EXPECT_EQ(u.at(0, 3), 2u);
}

}  // namespace
}  // namespace orbitscope
