#include "corpus.hpp"

#include <algorithm>
#include <numeric>

namespace orbitscope::testing {

std::string data_path(const std::string& name) {
  return std::string(ORBITSCOPE_TEST_DATA) + "/" + name;
}

Graph graph_from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  int bit = 0;
  for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
    for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v, ++bit) {
      if (mask >> bit & 1u) edges.emplace_back(u, v);
    }
  }
  return from_edges(n, edges);
}

bool is_edge(const Graph& g, VertexId u, VertexId v) { return g.palette()[g.at(u, v)] == 1u; }

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
    for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return from_edges(n, edges);
}

Graph random_digraph(std::size_t n, std::size_t colors, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, colors - 1);
  std::vector<std::uint64_t> labels(n * n);
  for (auto& l : labels) l = pick(rng);
  return Graph::from_labels(n, labels);
}

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<VertexId> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

Graph c5() { return cycle_graph(5); }

Graph rigid6() {
  const std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
  return from_edges(6, edges);
}

std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 0; n <= 4; ++n) {
    const std::uint32_t masks = 1u << (n * (n - (n ? 1 : 0)) / 2);
    for (std::uint32_t m = 0; m < masks; ++m) out.push_back(graph_from_mask(n, m));
  }
  out.push_back(c5());
  out.push_back(rigid6());
  out.push_back(complete_graph(6));
  out.push_back(cycle_graph(8));
  out.push_back(path_graph(7));
  out.push_back(disjoint_union(cycle_graph(3), cycle_graph(4)));
  out.push_back(disjoint_union(cycle_graph(4), cycle_graph(4)));
  Rng rng(20240611);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 5 + static_cast<std::size_t>(i % 4);
    out.push_back(random_graph(n, 0.2 + 0.3 * (i % 3), rng));
  }
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(i % 5);
    out.push_back(random_digraph(n, 2 + static_cast<std::size_t>(i % 2), rng));
  }
  return out;
}

Window random_matrix(std::size_t k, VertexId range, Rng& rng) {
  std::vector<VertexId> pool(static_cast<std::size_t>(range));
  std::iota(pool.begin(), pool.end(), 0);
  Window m;
  std::shuffle(pool.begin(), pool.end(), rng);
  m.top.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k + 1));
  std::shuffle(pool.begin(), pool.end(), rng);
  m.bottom.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k + 1));
  return m;
}

}  // namespace orbitscope::testing

namespace orbitscope {

void PrintTo(const Graph& g, std::ostream* os) {
  *os << "graph n=" << g.order() << " [";
  for (std::size_t u = 0; u < g.order(); ++u) {
    *os << (u ? " | " : "");
    for (std::size_t v = 0; v < g.order(); ++v) {
      *os << (v ? " " : "") << g.at(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  *os << "]";
}

void PrintTo(const OrderedPartition& p, std::ostream* os) {
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    *os << (c ? " {" : "{");
    bool first = true;
    for (VertexId v : p.members(static_cast<ClassId>(c))) {
      *os << (first ? "" : ",") << v;
      first = false;
    }
    *os << "}";
  }
}

void PrintTo(const Permutation& p, std::ostream* os) { *os << p.cycle_string(); }

}  // namespace orbitscope
