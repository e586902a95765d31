#include <gtest/gtest.h>

#include "corpus.hpp"
#include "orbitscope/assembly.hpp"
#include "orbitscope/errors.hpp"
#include "orbitscope/io.hpp"

namespace orbitscope {
namespace {

Window win(std::vector<VertexId> top, std::vector<VertexId> bottom) {
  return Window{std::move(top), std::move(bottom)};
}

WindowSet c2_prime() {
  return WindowSet(2, {win({1, 2}, {4, 5}), win({2, 3}, {5, 6}), win({3, 1}, {6, 4})});
}

WindowSet c2_double_prime() {
  return WindowSet(2, {win({1, 2}, {4, 5}), win({2, 3}, {5, 6}), win({3, 4}, {6, 1})});
}

WindowSet renamed(const WindowSet& ws, const std::vector<VertexId>& name) {
  std::vector<Window> out;
  for (const auto& e : ws.elements()) {
    Window w;
    for (VertexId v : e.top) w.top.push_back(name[static_cast<std::size_t>(v)]);
    for (VertexId v : e.bottom) w.bottom.push_back(name[static_cast<std::size_t>(v)]);
    out.push_back(std::move(w));
  }
  return WindowSet(ws.width(), std::move(out));
}

TEST(WindowSet, Validation) {
  EXPECT_THROW(WindowSet(2, {win({1, 1}, {2, 3})}), InvariantViolation);
  EXPECT_THROW(WindowSet(2, {win({1, 2}, {3, 3})}), InvariantViolation);
  EXPECT_THROW(WindowSet(2, {win({1, 2, 3}, {4, 5, 6})}), InvariantViolation);
  EXPECT_THROW(WindowSet(0, {}), InvariantViolation);
  // The same entry may appear in both rows.
  EXPECT_NO_THROW(WindowSet(2, {win({1, 2}, {2, 1})}));
}

TEST(Assembly, AssembledExample) {
  const auto r = is_assembled(c2_prime());
  EXPECT_TRUE(r.assembled);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, win({1, 2, 3}, {4, 5, 6}));
  EXPECT_TRUE(r.diagnostic.empty());
}

TEST(Assembly, NonAssembledExample) {
  const auto r = is_assembled(c2_double_prime());
  EXPECT_FALSE(r.assembled);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_TRUE(r.diagnostic.empty());
}

TEST(Assembly, ExamplesFromFiles) {
  const auto a = io::parse_window_set(io::read_file(testing::data_path("c2_prime.ws")));
  const auto b = io::parse_window_set(io::read_file(testing::data_path("c2_double_prime.ws")));
  EXPECT_EQ(a.elements(), c2_prime().elements());
  EXPECT_EQ(b.elements(), c2_double_prime().elements());
}

TEST(Assembly, WrongCardinality) {
  const auto r = is_assembled(WindowSet(2, {win({1, 2}, {4, 5}), win({2, 3}, {5, 6})}));
  EXPECT_FALSE(r.assembled);
  EXPECT_FALSE(r.diagnostic.empty());
  EXPECT_FALSE(is_assembled(WindowSet(1, {})).assembled);
}

TEST(Assembly, WidthOne) {
  const auto r = is_assembled(WindowSet(1, {win({7}, {3}), win({2}, {9})}));
  ASSERT_TRUE(r.assembled);
  EXPECT_EQ(cyclic_windows(*r.witness, 1).elements(),
            WindowSet(1, {win({7}, {3}), win({2}, {9})}).elements());
}

TEST(Assembly, CyclicWindows) {
  const auto ws = cyclic_windows(win({1, 2, 3}, {4, 5, 6}), 2);
  EXPECT_EQ(ws.elements(), c2_prime().elements());
  EXPECT_THROW(cyclic_windows(win({1, 2}, {4, 5}), 2), InvariantViolation);
}

TEST(Assembly, RoundTrip) {
  testing::Rng rng(2718);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 1 + static_cast<std::size_t>(i % 3);
    const Window m = testing::random_matrix(k, 9, rng);
    const WindowSet ws = cyclic_windows(m, k);
    const auto r = is_assembled(ws);
    ASSERT_TRUE(r.assembled);
    EXPECT_EQ(cyclic_windows(*r.witness, k).elements(), ws.elements());
  }
}

TEST(Assembly, InvariantUnderRenaming) {
  testing::Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    const auto perm = testing::random_permutation(10, rng);
    const std::vector<VertexId> name(perm.image().begin(), perm.image().end());
    for (const WindowSet& ws : {c2_prime(), c2_double_prime()}) {
      EXPECT_EQ(is_assembled(renamed(ws, name)).assembled, is_assembled(ws).assembled);
    }
    const Window m = testing::random_matrix(3, 9, rng);
    EXPECT_TRUE(is_assembled(renamed(cyclic_windows(m, 3), name)).assembled);
  }
}

TEST(Projection, StrictColumns) {
  const std::set<Column> prime{{1, 4}, {2, 5}, {3, 6}};
  EXPECT_EQ(project_to_vertices(c2_prime()), prime);
  const std::set<Column> double_prime{{1, 4}, {2, 5}, {3, 6}, {4, 1}};
  EXPECT_EQ(project_to_vertices(c2_double_prime()), double_prime);
  EXPECT_TRUE(project_to_vertices(WindowSet(2, {})).empty());
}

TEST(Projection, UnorderedSubsetsAgree) {
  EXPECT_EQ(project_to_vertex_subsets(c2_prime()), project_to_vertex_subsets(c2_double_prime()));
}

}  // namespace
}  // namespace orbitscope
