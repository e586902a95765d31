#include "orbitscope/graph.hpp"

#include <algorithm>

#include "orbitscope/errors.hpp"

namespace orbitscope {

Graph Graph::from_labels(std::size_t n, std::span<const std::uint64_t> labels) {
  if (labels.size() != n * n) {
    throw SizeMismatch("color matrix has " + std::to_string(labels.size()) +
                       " entries, expected " + std::to_string(n * n));
  }
  Graph g;
  g.n_ = n;
  g.palette_.assign(labels.begin(), labels.end());
  std::sort(g.palette_.begin(), g.palette_.end());
  g.palette_.erase(std::unique(g.palette_.begin(), g.palette_.end()), g.palette_.end());
  g.colors_.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::lower_bound(g.palette_.begin(), g.palette_.end(), labels[i]);
    g.colors_[i] = static_cast<ColorId>(it - g.palette_.begin());
  }
  return g;
}

Graph Graph::from_matrix(std::size_t n, std::span<const ColorId> colors) {
  std::vector<std::uint64_t> labels(colors.begin(), colors.end());
  return from_labels(n, labels);
}

Graph apply_permutation(const Graph& g, const Permutation& perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw SizeMismatch("permutation degree differs from graph order");
  std::vector<std::uint64_t> labels(n * n);
  const auto palette = g.palette();
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t pu = static_cast<std::size_t>(perm(static_cast<VertexId>(u)));
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t pv = static_cast<std::size_t>(perm(static_cast<VertexId>(v)));
      labels[pu * n + pv] = palette[g.at(static_cast<VertexId>(u), static_cast<VertexId>(v))];
    }
  }
  return Graph::from_labels(n, labels);
}

bool is_automorphism(const Graph& g, const Permutation& perm) {
  return is_isomorphism(g, g, perm);
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const Permutation& perm) {
  const std::size_t n = g1.order();
  if (perm.size() != n || g2.order() != n) {
    throw SizeMismatch("permutation degree differs from graph order");
  }
  if (!std::ranges::equal(g1.palette(), g2.palette())) return false;
  for (std::size_t u = 0; u < n; ++u) {
    const VertexId pu = perm(static_cast<VertexId>(u));
    for (std::size_t v = 0; v < n; ++v) {
      if (g2.at(pu, perm(static_cast<VertexId>(v))) !=
          g1.at(static_cast<VertexId>(u), static_cast<VertexId>(v))) {
        return false;
      }
    }
  }
  return true;
}

Graph from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::uint64_t> labels(n * n, 2);
  for (std::size_t v = 0; v < n; ++v) labels[v * n + v] = 0;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw RangeError("edge endpoint out of range");
    }
    if (u == v) throw InvariantViolation("self-loop in simple graph");
    const auto su = static_cast<std::size_t>(u);
    const auto sv = static_cast<std::size_t>(v);
    labels[su * n + sv] = 1;
    labels[sv * n + su] = 1;
  }
  return Graph::from_labels(n, labels);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  return from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>((v + 1) % n));
  }
  return from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(v + 1));
  }
  return from_edges(n, edges);
}

// Cross pairs get label 2, the non-edge color of the simple-graph encoding.
Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t na = a.order();
  const std::size_t n = na + b.order();
  std::vector<std::uint64_t> labels(n * n, 2);
  for (std::size_t u = 0; u < na; ++u) {
    for (std::size_t v = 0; v < na; ++v) {
      labels[u * n + v] = a.palette()[a.at(static_cast<VertexId>(u), static_cast<VertexId>(v))];
    }
  }
  for (std::size_t u = 0; u < b.order(); ++u) {
    for (std::size_t v = 0; v < b.order(); ++v) {
      labels[(na + u) * n + na + v] =
          b.palette()[b.at(static_cast<VertexId>(u), static_cast<VertexId>(v))];
    }
  }
  return Graph::from_labels(n, labels);
}

}  // namespace orbitscope
